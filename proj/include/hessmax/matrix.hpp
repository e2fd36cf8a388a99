// Upper Hessenberg matrices with a constant subdiagonal, exact determinant
// machinery, and compact encodings of finite-population entry patterns.
//
// Entry layout: the n(n+1)/2 upper-triangular entries (i, j), j >= i, are
// stored row-major.  Pattern codes use the same order, least significant
// digit first, so the code's digit k is the entry in upper slot k.  This
// layout is part of the on-disk/CLI contract and must not change.

#ifndef HESSMAX_MATRIX_HPP
#define HESSMAX_MATRIX_HPP

#include "hessmax/polynomial.hpp"
#include "hessmax/scalar.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hessmax {

// Finite set the upper-triangular entries are drawn from: either {0, t} or
// {0, 1, ..., d}.
struct Population {
    enum class Kind { Binary, Range };

    Kind kind = Kind::Binary;
    Rational t = Rational(1); // Binary only
    unsigned d = 1;           // Range only

    static Population binary(Rational t_val) {
        Population p;
        p.kind = Kind::Binary;
        p.t = std::move(t_val);
        return p;
    }
    static Population range(unsigned d_val) {
        if (d_val == 0) throw std::invalid_argument("Population: range needs d >= 1");
        Population p;
        p.kind = Kind::Range;
        p.d = d_val;
        return p;
    }

    unsigned base() const { return kind == Kind::Binary ? 2u : d + 1; }
    Rational value(unsigned digit) const {
        if (digit >= base()) throw std::invalid_argument("Population: digit out of range");
        if (kind == Kind::Binary) return digit ? t : Rational(0);
        return Rational(static_cast<long>(digit));
    }
    std::string describe() const;
};

class HessMatrix {
public:
    HessMatrix(unsigned n, Rational subdiag);
    HessMatrix(unsigned n, Rational subdiag, std::vector<Rational> upper);

    unsigned dim() const { return n_; }
    const Rational& subdiag() const { return sub_; }

    // Upper-slot index of (i, j), 0-based, j >= i.
    static std::size_t upper_slot(unsigned n, unsigned i, unsigned j) {
        return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
    }
    static std::size_t upper_count(unsigned n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }

    const Rational& upper(unsigned i, unsigned j) const { return upper_[upper_slot(n_, i, j)]; }
    void set_upper(unsigned i, unsigned j, Rational v) { upper_[upper_slot(n_, i, j)] = std::move(v); }
    const std::vector<Rational>& upper_entries() const { return upper_; }

    // Full matrix view: subdiagonal value, implicit zeros below it.
    Rational entry(unsigned i, unsigned j) const;

private:
    unsigned n_;
    Rational sub_;
    std::vector<Rational> upper_;
};

// Exact determinant via the leading-principal-minor recurrence
//   p_k = sum_{i=1..k} (-1)^(k-i) a_ik s^(k-i) p_{i-1},  p_0 = 1.
Rational determinant(const HessMatrix& m);

// H_1..H_{n+1}, where H_k is the determinant of the bottom-right
// (n+1-k) x (n+1-k) block and H_{n+1} = 1.  Computed by first-column
// expansion from the bottom, independently of determinant() above.
std::vector<Rational> trailing_minors(const HessMatrix& m);

// Bottom-right (n+1-k) x (n+1-k) submatrix, 1 <= k <= n.
HessMatrix bottom_right(const HessMatrix& m, unsigned k);

// Compact encoding of the upper entries as digits of a nonnegative integer.
struct EntryPattern {
    unsigned n = 0;
    Population pop;
    BigInt code;

    std::size_t slot_count() const { return HessMatrix::upper_count(n); }
    std::vector<unsigned> digits() const;

    static EntryPattern from_digits(unsigned n, const Population& pop, const std::vector<unsigned>& digits);
    static BigInt space_size(unsigned n, const Population& pop);
};

HessMatrix realize(const EntryPattern& p, const Rational& s);

// Inverse of realize for matrices whose upper entries all lie in pop;
// throws std::invalid_argument otherwise.
EntryPattern pattern_of(const HessMatrix& m, const Population& pop);

// Magnitudes of the determinant's graded coefficients for a binary pattern:
// det = sum_l (-1)^(n-l) c_l s^(n-l) t^l with c_l >= 0.
struct CoeffVector {
    unsigned n = 0;
    std::vector<std::uint64_t> c; // c[l-1] holds c_l, l = 1..n
};

// c_l counts the nonzero entry chains a_{1,i1} a_{i1+1,i2} ... a_{i_{l-1}+1,n};
// O(n^3) dynamic program over chain positions.  Binary populations only.
CoeffVector path_coefficients(const EntryPattern& p);

// Same dynamic program on an explicit upper-triangular nonzero mask
// (row-major upper slots); shared by the search and envelope fast paths.
CoeffVector path_coefficients_mask(unsigned n, const std::vector<std::uint8_t>& nonzero_upper);

// Bitmask fast path for dimensions whose slot count fits in 64 bits
// (bit k of bits = upper slot k nonzero).
CoeffVector path_coefficients_bits(unsigned n, std::uint64_t bits);

// det = t^n q(s/t) with q(x) = sum_l (-1)^(n-l) c_l x^(n-l).
UniPoly det_polynomial(const EntryPattern& p);
UniPoly det_polynomial(const CoeffVector& cv);

// Evaluates sum_l (-1)^(n-l) c_l s^(n-l) t^l.
Rational graded_det_value(const CoeffVector& cv, const Rational& s, const Rational& t);

// --- matrix text format -----------------------------------------------------
//
// Line 1: "n s" with s an integer or "p/q"; then n rows of n entries.
// Entries below the subdiagonal must be zero and subdiagonal entries must
// equal s.

struct MatrixParseError : std::runtime_error {
    MatrixParseError(int line, int column, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             what_arg),
          line(line),
          column(column) {}
    int line;
    int column;
};

void write_matrix(std::ostream& os, const HessMatrix& m);
HessMatrix read_matrix(std::istream& is);

} // namespace hessmax

#endif
