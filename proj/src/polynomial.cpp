#include "hessmax/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hessmax {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(c[i + j].raw(), a.c_[i].raw(), b.c_[j].raw());
        }
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<BigInt> c;
    c.reserve(c_.size());
    for (const BigInt& v : c_) c.push_back(-v);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const BigInt& k) const {
    if (k.is_zero()) return UniPoly();
    std::vector<BigInt> c;
    c.reserve(c_.size());
    for (const BigInt& v : c_) c.push_back(v * k);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<BigInt> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * BigInt(static_cast<long>(i)));
    return UniPoly(std::move(c));
}

// p(a/b) = N / b^deg with N = sum c_i a^i b^(deg-i), evaluated by Horner.
static BigInt eval_numerator(const std::vector<BigInt>& c, const BigInt& a, const BigInt& b) {
    BigInt acc = c.back();
    BigInt bpow(1);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc *= a;
        bpow *= b;
        mpz_addmul(acc.raw(), c[i].raw(), bpow.raw());
    }
    return acc;
}

Rational UniPoly::eval(const Rational& x) const {
    if (is_zero()) return Rational(0);
    BigInt a = x.num(), b = x.den();
    BigInt n = eval_numerator(c_, a, b);
    return Rational(n, b.pow(static_cast<unsigned long>(degree())));
}

BigInt UniPoly::eval_int(const BigInt& x) const {
    if (is_zero()) return BigInt(0);
    BigInt acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

int UniPoly::sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    return eval_numerator(c_, x.num(), x.den()).sgn();
}

BigInt UniPoly::content() const {
    BigInt g(0);
    for (const BigInt& v : c_) {
        g = gcd(g, v);
        if (g.is_one()) break;
    }
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    BigInt g = content();
    std::vector<BigInt> c;
    c.reserve(c_.size());
    for (const BigInt& v : c_) c.push_back(div_exact(v, g));
    return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        BigInt a = c_[i].abs();
        if (first) {
            if (c_[i].sgn() < 0) os << "-";
            first = false;
        } else {
            os << (c_[i].sgn() < 0 ? " - " : " + ");
        }
        if (i == 0 || !a.is_one()) os << a.to_string();
        if (i > 0) {
            if (!a.is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
    if (a.degree() < b.degree()) return a;
    std::vector<BigInt> r(a.coeffs());
    const std::vector<BigInt>& d = b.coeffs();
    const BigInt& lead = d.back();
    int da = a.degree(), db = b.degree();
    for (int k = da; k >= db; --k) {
        BigInt top = r[static_cast<std::size_t>(k)];
        for (int i = 0; i <= k; ++i) r[static_cast<std::size_t>(i)] *= lead;
        if (!top.is_zero()) {
            for (int i = 0; i < db; ++i) {
                mpz_submul(r[static_cast<std::size_t>(k - db + i)].raw(), top.raw(), d[static_cast<std::size_t>(i)].raw());
            }
        }
        r[static_cast<std::size_t>(k)] = BigInt(0);
    }
    r.resize(static_cast<std::size_t>(db));
    return UniPoly(std::move(r));
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (a.is_zero()) return UniPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::invalid_argument("divide_exact: not divisible");
    std::vector<BigInt> r(a.coeffs());
    const std::vector<BigInt>& d = b.coeffs();
    std::vector<BigInt> q(static_cast<std::size_t>(da - db + 1), BigInt(0));
    for (int k = da; k >= db; --k) {
        const BigInt& top = r[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        if (!(top % d.back()).is_zero()) throw std::invalid_argument("divide_exact: not divisible");
        BigInt f = div_exact(top, d.back());
        for (int i = 0; i <= db; ++i) {
            mpz_submul(r[static_cast<std::size_t>(k - db + i)].raw(), f.raw(), d[static_cast<std::size_t>(i)].raw());
        }
        q[static_cast<std::size_t>(k - db)] = std::move(f);
    }
    for (const BigInt& v : r) {
        if (!v.is_zero()) throw std::invalid_argument("divide_exact: not divisible");
    }
    return UniPoly(std::move(q));
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    BigInt ca = a.content(), cb = b.content();
    if (a.is_zero()) return b.leading().sgn() < 0 ? (-b) : b;
    if (b.is_zero()) return a.leading().sgn() < 0 ? (-a) : a;
    BigInt cg = gcd(ca, cb);
    UniPoly u = a.primitive_part();
    UniPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        UniPoly r = pseudo_rem(u, v);
        u = std::move(v);
        v = r.is_zero() ? UniPoly() : r.primitive_part();
    }
    if (u.leading().sgn() < 0) u = -u;
    return u.scaled(cg);
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) return UniPoly();
    UniPoly u = p.primitive_part();
    if (u.degree() == 0) return UniPoly::constant(BigInt(1));
    UniPoly g = poly_gcd(u, u.derivative());
    if (g.degree() == 0) return u;
    return divide_exact(u, g).primitive_part();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p.primitive_part());
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative().primitive_part());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const UniPoly& f = chain[chain.size() - 2];
        const UniPoly& g = chain.back();
        UniPoly r = pseudo_rem(f, g);
        if (r.is_zero()) break;
        // prem scales the true remainder by lc(g)^(delta+1); a negative scale
        // flips the sign, which must be undone before negating.
        int delta = f.degree() - g.degree();
        bool flipped = g.leading().sgn() < 0 && (delta + 1) % 2 == 1;
        r = r.primitive_part();
        chain.push_back(flipped ? r : -r);
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int vars = 0, last = 0;
    for (const UniPoly& f : chain) {
        int s = f.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

int roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    assert(!chain.empty());
    assert(a < b);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

} // namespace hessmax
