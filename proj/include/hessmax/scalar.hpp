// Exact arbitrary-precision integers and rationals on top of GMP.
//
// BigInt wraps mpz_t, Rational wraps mpq_t (always canonical: positive
// denominator, reduced).  These are the only scalar types used by the
// library; no floating point appears anywhere in the computation paths.

#ifndef HESSMAX_SCALAR_HPP
#define HESSMAX_SCALAR_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hessmax {

class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long n) { mpz_init_set_si(v_, n); }          // NOLINT: implicit by design
    BigInt(int n) : BigInt(static_cast<long>(n)) {}     // NOLINT
    BigInt(unsigned long n) { mpz_init_set_ui(v_, n); } // NOLINT

    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("BigInt: cannot parse \"" + s + "\"");
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    // Raw handle for hot loops that call mpz_* directly.
    mpz_ptr raw() { return v_; }
    mpz_srcptr raw() const { return v_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.v_, v_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    // Quotient of an exact division; aborts in GMP if the division is not exact.
    friend BigInt div_exact(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_divexact(r.v_, a.v_, b.v_);
        return r;
    }
    // Truncated division / remainder (sign of remainder follows the dividend).
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_tdiv_q(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_tdiv_r(r.v_, a.v_, b.v_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) >= 0; }

    int sgn() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_, 1) == 0; }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.v_, v_);
        return r;
    }

    BigInt pow(unsigned long e) const {
        BigInt r;
        mpz_pow_ui(r.v_, v_, e);
        return r;
    }

    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt lcm(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_lcm(r.v_, a.v_, b.v_);
        return r;
    }

    bool fits_slong() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const {
        if (!fits_slong()) throw std::overflow_error("BigInt: value does not fit in long");
        return mpz_get_si(v_);
    }
    bool fits_ulong() const { return mpz_fits_ulong_p(v_) != 0; }
    unsigned long to_ulong() const {
        if (!fits_ulong()) throw std::overflow_error("BigInt: value does not fit in unsigned long");
        return mpz_get_ui(v_);
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string r(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, r.size() + 1);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

    friend void swap(BigInt& a, BigInt& b) noexcept { mpz_swap(a.v_, b.v_); }

private:
    mpz_t v_;
};

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

// Canonical rational: reduced, denominator > 0.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) { // NOLINT
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {} // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    Rational(const BigInt& n) { // NOLINT
        mpq_init(v_);
        mpq_set_z(v_, n.raw());
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    mpq_ptr raw() { return v_; }
    mpq_srcptr raw() const { return v_; }

    BigInt num() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(v_));
        return r;
    }
    BigInt den() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(v_));
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    int sgn() const { return mpq_sgn(v_); }
    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    Rational abs() const {
        Rational r;
        mpq_abs(r.v_, v_);
        return r;
    }

    // x^e for integer e; e < 0 requires x != 0.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw std::invalid_argument("Rational: 0 raised to negative power");
        unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), ue);
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), ue);
        if (e < 0) mpq_inv(r.v_, r.v_);
        return r;
    }

    // "p/q" when q != 1, plain integer otherwise.
    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string r(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, r.size() + 1);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

    friend void swap(Rational& a, Rational& b) noexcept { mpq_swap(a.v_, b.v_); }

private:
    mpq_t v_;
};

// Parses "p" or "p/q" in base 10 with an optional leading sign.  Anything
// else (in particular decimal notation) is rejected.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash != std::string::npos) throw std::invalid_argument("rational: bad token \"" + s + "\"");
            slash = i;
        } else if (c == '-' || c == '+') {
            if (i != 0) throw std::invalid_argument("rational: bad token \"" + s + "\"");
        } else if (c < '0' || c > '9') {
            throw std::invalid_argument("rational: bad token \"" + s + "\"");
        }
    }
    if (slash == 0 || slash == s.size() - 1) throw std::invalid_argument("rational: bad token \"" + s + "\"");
    std::string body = s[0] == '+' ? s.substr(1) : s; // mpz_set_str rejects a leading plus
    if (body.empty() || body == "-") throw std::invalid_argument("rational: bad token \"" + s + "\"");
    if (slash == std::string::npos) return Rational(BigInt(body));
    if (s[0] == '+') slash -= 1;
    BigInt num(body.substr(0, slash));
    BigInt den(body.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("rational: zero denominator in \"" + s + "\"");
    return Rational(num, den);
}

} // namespace hessmax

#endif
