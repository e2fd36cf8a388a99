// Univariate polynomials with arbitrary-precision integer coefficients.
//
// Coefficients are stored dense, ascending by exponent, with the leading
// coefficient nonzero (empty vector = zero polynomial).  Evaluation at a
// rational point is exact.

#ifndef HESSMAX_POLYNOMIAL_HPP
#define HESSMAX_POLYNOMIAL_HPP

#include "hessmax/scalar.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hessmax {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static UniPoly constant(BigInt v) {
        UniPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static UniPoly monomial(BigInt coeff, unsigned deg) {
        UniPoly p;
        if (!coeff.is_zero()) {
            p.c_.assign(deg, BigInt(0));
            p.c_.push_back(std::move(coeff));
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& leading() const { return c_.back(); }
    BigInt coeff(unsigned i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly scaled(const BigInt& k) const;
    UniPoly square() const { return *this * *this; }
    UniPoly derivative() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Exact value at x = a/b computed with integer arithmetic only.
    Rational eval(const Rational& x) const;
    BigInt eval_int(const BigInt& x) const;
    int sign_at(const Rational& x) const;

    // Content (gcd of coefficients, >= 0; 0 only for the zero polynomial).
    BigInt content() const;
    // p / content(p), keeping the sign of the leading coefficient.
    UniPoly primitive_part() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b);

// Exact quotient; throws std::invalid_argument if b does not divide a in Z[x].
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

// Polynomial gcd over Z[x] (primitive Euclidean algorithm), normalized to a
// positive leading coefficient.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Primitive square-free part of p (same distinct real roots, all simple).
UniPoly squarefree_part(const UniPoly& p);

// Sturm chain of a (square-free) polynomial: f0 = p, f1 = p', then negated
// remainders, each reduced to primitive form with the sign preserved.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Sign variations in the chain evaluated at x (zeros skipped).
int sign_variations(const std::vector<UniPoly>& chain, const Rational& x);

// Number of distinct real roots of the chain's base polynomial in (a, b];
// requires that the base polynomial not vanish at a.
int roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);

} // namespace hessmax

#endif
