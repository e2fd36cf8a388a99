#include "hessmax/roots.hpp"

#include <algorithm>
#include <cassert>

namespace hessmax {

Rational dyadic_between(const Rational& lo, const Rational& hi) {
    Rational w = hi - lo;
    assert(w.sgn() > 0);
    unsigned k = 0;
    Rational p(1);
    while (p * Rational(4) > w) {
        p = p * Rational(1, 2);
        ++k;
    }
    Rational mid = (lo + hi) * Rational(1, 2);
    BigInt scaled;
    mpz_mul_2exp(scaled.raw(), mid.num().raw(), k);
    BigInt fl;
    mpz_fdiv_q(fl.raw(), scaled.raw(), mid.den().raw());
    Rational cand = Rational(fl) * p; // in (mid - w/4, mid], i.e. strictly inside
    assert(lo < cand && cand < hi);
    return cand;
}

namespace {

// Picks a point near x where w does not vanish, stepping by successively
// halved offsets.  Terminates because w has finitely many roots.
Rational nudge_off_root(const UniPoly& w, const Rational& x, Rational step) {
    Rational y = x;
    while (w.sign_at(y) == 0) {
        step = step * Rational(1, 2);
        y = x + step;
    }
    return y;
}

struct Isolator {
    const UniPoly& w;
    const std::vector<UniPoly>& chain;
    std::vector<IsolatingInterval>& out;

    void emit(const Rational& a, const Rational& b) { out.push_back(IsolatingInterval{a, b, w}); }

    // Both endpoints are non-roots of w.
    void bisect(const Rational& a, const Rational& b) {
        int count = roots_in(chain, a, b);
        if (count == 0) return;
        if (count == 1) {
            emit(a, b);
            return;
        }
        Rational mid = dyadic_between(a, b);
        if (w.sign_at(mid) == 0) {
            // Root exactly on the cut: move the cut by half the current step.
            mid = nudge_off_root(w, mid, (b - a) * Rational(1, 4));
        }
        bisect(a, mid);
        bisect(mid, b);
    }

    // Isolates a root known to sit exactly at x (w(x) == 0): shrink a
    // symmetric window until it contains no other root.
    void emit_exact(const Rational& x, Rational h) {
        for (;;) {
            Rational a = x - h, b = x + h;
            if (w.sign_at(a) != 0 && w.sign_at(b) != 0 && roots_in(chain, a, b) == 1) {
                emit(a, b);
                return;
            }
            h = h * Rational(1, 2);
        }
    }
};

} // namespace

std::vector<IsolatingInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& max_width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_roots: empty range");
    if (max_width.sgn() <= 0) throw std::invalid_argument("isolate_roots: width must be positive");

    std::vector<IsolatingInterval> out;
    UniPoly w = squarefree_part(p);
    if (w.degree() <= 0) return out;
    std::vector<UniPoly> chain = sturm_chain(w);

    Isolator iso{w, chain, out};
    Rational h0 = (hi - lo) * Rational(1, 4);

    Rational a = lo, b = hi;
    if (w.sign_at(lo) == 0) {
        iso.emit_exact(lo, h0);
        a = out.back().hi; // continue strictly past the endpoint root
    }
    bool hi_is_root = (w.sign_at(hi) == 0);
    if (hi_is_root) b = hi - h0;
    while (w.sign_at(b) == 0) b = hi - (hi - b) * Rational(1, 2);
    if (a < b) iso.bisect(a, b);
    if (hi_is_root) {
        // Roots in (b, hi) would have been missed; shrink the endpoint
        // window until it contains the endpoint root alone.
        Rational h = hi - b;
        for (;;) {
            Rational wlo = hi - h, whi = hi + h;
            if (w.sign_at(wlo) != 0 && w.sign_at(whi) != 0 && roots_in(chain, wlo, whi) == 1) break;
            h = h * Rational(1, 2);
        }
        // Anything strictly between b and the endpoint window still matters.
        Rational wlo = hi - h;
        if (b < wlo && w.sign_at(wlo) != 0) iso.bisect(b, wlo);
        iso.emit_exact(hi, h);
    }

    for (IsolatingInterval& iv : out) iv = refine_interval(std::move(iv), max_width);
    return out;
}

IsolatingInterval refine_interval(IsolatingInterval iv, const Rational& width) {
    if (width.sgn() <= 0) throw std::invalid_argument("refine_interval: width must be positive");
    int slo = iv.witness.sign_at(iv.lo);
    assert(slo != 0 && iv.witness.sign_at(iv.hi) == -slo);
    while (iv.hi - iv.lo > width) {
        Rational mid = dyadic_between(iv.lo, iv.hi);
        int sm = iv.witness.sign_at(mid);
        if (sm == 0) {
            // The root itself is rational; pin a minimal window around it.
            Rational d = width * Rational(1, 4);
            if (mid - iv.lo < d) d = (mid - iv.lo) * Rational(1, 2);
            if (iv.hi - mid < d) d = (iv.hi - mid) * Rational(1, 2);
            iv.lo = mid - d;
            iv.hi = mid + d;
            break;
        }
        (sm == slo ? iv.lo : iv.hi) = mid;
    }
    return iv;
}

namespace {

constexpr unsigned long long kDivisorEnumerationCap = 1000000000000ull;

// Positive divisors of |v|; nullopt when v is too large to factor naively.
std::optional<std::vector<BigInt>> divisors(const BigInt& v) {
    BigInt a = v.abs();
    if (!a.fits_ulong()) return std::nullopt;
    unsigned long long n = a.to_ulong();
    if (n == 0 || n > kDivisorEnumerationCap) return std::nullopt;
    std::vector<BigInt> ds;
    for (unsigned long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.emplace_back(static_cast<unsigned long>(d));
            if (d != n / d) ds.emplace_back(static_cast<unsigned long>(n / d));
        }
    }
    return ds;
}

} // namespace

std::optional<std::vector<Rational>> rational_roots_in(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots_in: zero polynomial");
    std::vector<Rational> found;

    // Strip x^k so the trailing coefficient is nonzero; x = 0 may be a root.
    unsigned low = 0;
    while (p.coeff(low).is_zero()) ++low;
    if (low > 0 && lo <= Rational(0) && Rational(0) <= hi) found.emplace_back(0);

    std::vector<BigInt> c;
    for (unsigned i = low; i <= static_cast<unsigned>(p.degree()); ++i) c.push_back(p.coeff(i));
    UniPoly q{std::vector<BigInt>(c)};
    if (q.degree() >= 1) {
        auto num_divs = divisors(q.coeff(0));
        auto den_divs = divisors(q.leading());
        if (!num_divs || !den_divs) return std::nullopt;
        for (const BigInt& a : *num_divs) {
            for (const BigInt& b : *den_divs) {
                for (int sign : {1, -1}) {
                    Rational r(sign > 0 ? a : -a, b);
                    if (r < lo || r > hi) continue;
                    if (q.sign_at(r) == 0) found.push_back(r);
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace hessmax
