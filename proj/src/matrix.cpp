#include "hessmax/matrix.hpp"

#include <cassert>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace hessmax {

std::string Population::describe() const {
    if (kind == Kind::Binary) return "binary t=" + t.to_string();
    return "range d=" + std::to_string(d);
}

HessMatrix::HessMatrix(unsigned n, Rational subdiag) : n_(n), sub_(std::move(subdiag)) {
    if (n == 0) throw std::invalid_argument("HessMatrix: dimension must be >= 1");
    upper_.assign(upper_count(n), Rational(0));
}

HessMatrix::HessMatrix(unsigned n, Rational subdiag, std::vector<Rational> upper)
    : n_(n), sub_(std::move(subdiag)), upper_(std::move(upper)) {
    if (n == 0) throw std::invalid_argument("HessMatrix: dimension must be >= 1");
    if (upper_.size() != upper_count(n)) throw std::invalid_argument("HessMatrix: wrong upper entry count");
}

Rational HessMatrix::entry(unsigned i, unsigned j) const {
    if (j >= i) return upper(i, j);
    if (j + 1 == i) return sub_;
    return Rational(0);
}

Rational determinant(const HessMatrix& m) {
    const unsigned n = m.dim();
    std::vector<Rational> spow(n, Rational(1));
    for (unsigned k = 1; k < n; ++k) spow[k] = spow[k - 1] * m.subdiag();

    std::vector<Rational> p(n + 1, Rational(0));
    p[0] = Rational(1);
    for (unsigned k = 1; k <= n; ++k) {
        Rational acc(0);
        for (unsigned i = 1; i <= k; ++i) {
            Rational term = m.upper(i - 1, k - 1) * spow[k - i] * p[i - 1];
            if ((k - i) % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[k] = std::move(acc);
    }
    return p[n];
}

std::vector<Rational> trailing_minors(const HessMatrix& m) {
    const unsigned n = m.dim();
    std::vector<Rational> spow(n, Rational(1));
    for (unsigned k = 1; k < n; ++k) spow[k] = spow[k - 1] * m.subdiag();

    // h[k-1] = H_k; expansion along the first column of the trailing block.
    std::vector<Rational> h(n + 1, Rational(0));
    h[n] = Rational(1);
    for (unsigned k = n; k >= 1; --k) {
        Rational acc(0);
        for (unsigned j = k; j <= n; ++j) {
            Rational term = m.upper(k - 1, j - 1) * spow[j - k] * h[j];
            if ((j - k) % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h[k - 1] = std::move(acc);
    }
    return h;
}

HessMatrix bottom_right(const HessMatrix& m, unsigned k) {
    const unsigned n = m.dim();
    if (k < 1 || k > n) throw std::invalid_argument("bottom_right: k out of range");
    const unsigned sz = n + 1 - k;
    HessMatrix b(sz, m.subdiag());
    for (unsigned i = 0; i < sz; ++i) {
        for (unsigned j = i; j < sz; ++j) b.set_upper(i, j, m.upper(k - 1 + i, k - 1 + j));
    }
    return b;
}

std::vector<unsigned> EntryPattern::digits() const {
    const std::size_t slots = slot_count();
    std::vector<unsigned> out(slots, 0);
    const unsigned base = pop.base();
    if (base == 2) {
        for (std::size_t k = 0; k < slots; ++k) out[k] = mpz_tstbit(code.raw(), k);
        return out;
    }
    BigInt rest = code;
    BigInt b(static_cast<long>(base));
    for (std::size_t k = 0; k < slots && !rest.is_zero(); ++k) {
        BigInt q, r;
        mpz_tdiv_qr(q.raw(), r.raw(), rest.raw(), b.raw());
        out[k] = static_cast<unsigned>(r.to_ulong());
        rest = std::move(q);
    }
    return out;
}

EntryPattern EntryPattern::from_digits(unsigned n, const Population& pop, const std::vector<unsigned>& digits) {
    if (digits.size() != HessMatrix::upper_count(n)) {
        throw std::invalid_argument("EntryPattern: wrong digit count");
    }
    const unsigned base = pop.base();
    BigInt code(0);
    BigInt b(static_cast<long>(base));
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (digits[k] >= base) throw std::invalid_argument("EntryPattern: digit out of range");
        mpz_mul(code.raw(), code.raw(), b.raw());
        mpz_add_ui(code.raw(), code.raw(), digits[k]);
    }
    EntryPattern p;
    p.n = n;
    p.pop = pop;
    p.code = std::move(code);
    return p;
}

BigInt EntryPattern::space_size(unsigned n, const Population& pop) {
    return BigInt(static_cast<long>(pop.base())).pow(HessMatrix::upper_count(n));
}

HessMatrix realize(const EntryPattern& p, const Rational& s) {
    if (p.code.sgn() < 0 || p.code >= EntryPattern::space_size(p.n, p.pop)) {
        throw std::invalid_argument("realize: code out of range");
    }
    std::vector<unsigned> dg = p.digits();
    std::vector<Rational> upper;
    upper.reserve(dg.size());
    for (unsigned d : dg) upper.push_back(p.pop.value(d));
    return HessMatrix(p.n, s, std::move(upper));
}

EntryPattern pattern_of(const HessMatrix& m, const Population& pop) {
    const unsigned base = pop.base();
    std::vector<unsigned> dg(HessMatrix::upper_count(m.dim()), 0);
    for (std::size_t k = 0; k < dg.size(); ++k) {
        const Rational& v = m.upper_entries()[k];
        bool matched = false;
        for (unsigned digit = 0; digit < base; ++digit) {
            if (v == pop.value(digit)) {
                dg[k] = digit;
                matched = true;
                break;
            }
        }
        if (!matched) throw std::invalid_argument("pattern_of: entry not in population");
    }
    return EntryPattern::from_digits(m.dim(), pop, dg);
}

namespace {

// Core chain-counting dynamic program over a 1-based nonzero predicate.
template <typename Nz>
CoeffVector chain_counts(unsigned n, Nz&& nz) {
    CoeffVector cv;
    cv.n = n;
    cv.c.assign(n, 0);
    cv.c[0] = nz(1, n) ? 1 : 0;
    if (n == 1) return cv;

    // ways(r, m): chains of m entries whose last chosen index is r <= n-1.
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) * n, 0);
    auto w = [&](unsigned r, unsigned m) -> std::uint64_t& { return ways[static_cast<std::size_t>(r) * n + m]; };
    for (unsigned r = 1; r <= n - 1; ++r) w(r, 1) = nz(1, r) ? 1 : 0;
    for (unsigned m = 2; m <= n - 1; ++m) {
        for (unsigned r = m; r <= n - 1; ++r) {
            std::uint64_t acc = 0;
            for (unsigned q = m - 1; q < r; ++q) {
                if (w(q, m - 1) && nz(q + 1, r)) acc += w(q, m - 1);
            }
            w(r, m) = acc;
        }
    }
    for (unsigned l = 2; l <= n; ++l) {
        std::uint64_t acc = 0;
        for (unsigned r = l - 1; r <= n - 1; ++r) {
            if (w(r, l - 1) && nz(r + 1, n)) acc += w(r, l - 1);
        }
        cv.c[l - 1] = acc;
    }
    return cv;
}

} // namespace

CoeffVector path_coefficients_mask(unsigned n, const std::vector<std::uint8_t>& nonzero_upper) {
    if (n == 0 || n > 60) throw std::invalid_argument("path_coefficients: dimension out of range");
    if (nonzero_upper.size() != HessMatrix::upper_count(n)) {
        throw std::invalid_argument("path_coefficients: wrong mask size");
    }
    return chain_counts(n, [&](unsigned i, unsigned j) -> bool {
        return nonzero_upper[HessMatrix::upper_slot(n, i - 1, j - 1)] != 0;
    });
}

CoeffVector path_coefficients_bits(unsigned n, std::uint64_t bits) {
    if (n == 0 || HessMatrix::upper_count(n) > 64) {
        throw std::invalid_argument("path_coefficients_bits: dimension out of range");
    }
    return chain_counts(
        n, [&](unsigned i, unsigned j) -> bool { return (bits >> HessMatrix::upper_slot(n, i - 1, j - 1)) & 1u; });
}

CoeffVector path_coefficients(const EntryPattern& p) {
    if (p.pop.kind != Population::Kind::Binary) {
        throw std::invalid_argument("path_coefficients: binary population required");
    }
    if (p.pop.t.is_zero()) throw std::invalid_argument("path_coefficients: t must be nonzero");
    std::vector<unsigned> dg = p.digits();
    std::vector<std::uint8_t> mask(dg.size());
    for (std::size_t k = 0; k < dg.size(); ++k) mask[k] = dg[k] ? 1 : 0;
    return path_coefficients_mask(p.n, mask);
}

UniPoly det_polynomial(const CoeffVector& cv) {
    std::vector<BigInt> coeffs(cv.n, BigInt(0));
    for (unsigned l = 1; l <= cv.n; ++l) {
        BigInt v(static_cast<unsigned long>(cv.c[l - 1]));
        coeffs[cv.n - l] = (cv.n - l) % 2 == 0 ? v : -v;
    }
    return UniPoly(std::move(coeffs));
}

UniPoly det_polynomial(const EntryPattern& p) { return det_polynomial(path_coefficients(p)); }

Rational graded_det_value(const CoeffVector& cv, const Rational& s, const Rational& t) {
    Rational acc(0);
    Rational spow(1), tp(1);
    std::vector<Rational> spows(cv.n + 1, Rational(1));
    for (unsigned k = 1; k <= cv.n; ++k) spows[k] = spows[k - 1] * s;
    for (unsigned l = 1; l <= cv.n; ++l) {
        tp *= t;
        if (cv.c[l - 1] == 0) continue;
        Rational term = Rational(BigInt(static_cast<unsigned long>(cv.c[l - 1]))) * spows[cv.n - l] * tp;
        if ((cv.n - l) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

void write_matrix(std::ostream& os, const HessMatrix& m) {
    os << m.dim() << " " << m.subdiag().to_string() << "\n";
    for (unsigned i = 0; i < m.dim(); ++i) {
        for (unsigned j = 0; j < m.dim(); ++j) {
            if (j) os << " ";
            os << m.entry(i, j).to_string();
        }
        os << "\n";
    }
}

namespace {

struct TokenReader {
    explicit TokenReader(std::istream& in) : is(in) {}

    std::istream& is;
    int line = 1;
    int col = 0; // column where the last token started

    // Reads the next whitespace-delimited token, tracking its position.
    std::string next(const std::string& what) {
        std::string tok;
        int c;
        int cur_col = col_cursor;
        while ((c = is.get()) != EOF) {
            if (c == '\n') {
                ++line_cursor;
                cur_col = 0;
                continue;
            }
            ++cur_col;
            if (std::isspace(c)) continue;
            tok.push_back(static_cast<char>(c));
            break;
        }
        if (tok.empty()) throw MatrixParseError(line_cursor, cur_col, "unexpected end of input, expected " + what);
        line = line_cursor;
        col = cur_col;
        while ((c = is.peek()) != EOF && !std::isspace(c)) {
            tok.push_back(static_cast<char>(is.get()));
            ++cur_col;
        }
        col_cursor = cur_col;
        return tok;
    }

    Rational next_rational(const std::string& what) {
        std::string tok = next(what);
        try {
            return parse_rational(tok);
        } catch (const std::invalid_argument& e) {
            throw MatrixParseError(line, col, std::string(e.what()));
        }
    }

private:
    int line_cursor = 1;
    int col_cursor = 0;
};

} // namespace

HessMatrix read_matrix(std::istream& is) {
    TokenReader rd(is);
    std::string ntok = rd.next("dimension");
    long n = 0;
    try {
        n = BigInt(ntok).to_long();
    } catch (const std::exception&) {
        throw MatrixParseError(rd.line, rd.col, "bad dimension \"" + ntok + "\"");
    }
    if (n < 1 || n > 10000) throw MatrixParseError(rd.line, rd.col, "dimension out of range");
    Rational s = rd.next_rational("subdiagonal value");

    HessMatrix m(static_cast<unsigned>(n), s);
    for (unsigned i = 0; i < m.dim(); ++i) {
        for (unsigned j = 0; j < m.dim(); ++j) {
            Rational v = rd.next_rational("matrix entry");
            if (j >= i) {
                m.set_upper(i, j, std::move(v));
            } else if (j + 1 == i) {
                if (v != s) {
                    throw MatrixParseError(rd.line, rd.col,
                                           "subdiagonal entry (" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ") must equal " + s.to_string());
                }
            } else {
                if (!v.is_zero()) {
                    throw MatrixParseError(rd.line, rd.col,
                                           "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                               ") below the subdiagonal must be 0");
                }
            }
        }
    }
    return m;
}

} // namespace hessmax
