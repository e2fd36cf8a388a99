#include "hessmax/oracles.hpp"

#include <stdexcept>

namespace hessmax {

std::string regime_name(RegimeTag r) {
    switch (r) {
        case RegimeTag::NegativeS: return "negativeS";
        case RegimeTag::CaseI: return "caseI";
        case RegimeTag::CaseII: return "caseII";
        case RegimeTag::CaseIII: return "caseIII";
        case RegimeTag::Open: return "open";
    }
    return "?";
}

Rational case_iii_threshold(unsigned n) {
    return Rational(4 * static_cast<long>(n) * static_cast<long>(n), 5);
}

std::vector<RegimeTag> classify_regime(unsigned n, const Rational& s, const Rational& t,
                                       const std::optional<Rational>& certified_ratio) {
    if (n == 0) throw std::invalid_argument("classify_regime: n >= 1 required");
    if (t.sgn() <= 0) throw std::invalid_argument("classify_regime: t > 0 required");
    std::vector<RegimeTag> tags;
    if (s.sgn() <= 0) {
        tags.push_back(RegimeTag::NegativeS);
        return tags;
    }
    if (s <= t) {
        tags.push_back(RegimeTag::CaseI);
        if (s == t && n >= 4) tags.push_back(RegimeTag::CaseII);
        return tags;
    }
    Rational ratio = s / t;
    if (ratio > case_iii_threshold(n)) {
        tags.push_back(RegimeTag::CaseIII);
        return tags;
    }
    if (n >= 4 && certified_ratio && ratio <= *certified_ratio) {
        tags.push_back(RegimeTag::CaseII);
        return tags;
    }
    tags.push_back(RegimeTag::Open);
    return tags;
}

Rational max_negative_s(unsigned n, const Rational& s, const Rational& t) {
    if (n == 0) throw std::invalid_argument("max_negative_s: n >= 1 required");
    if (s.sgn() > 0) throw std::invalid_argument("max_negative_s: s <= 0 required");
    if (t.sgn() <= 0) throw std::invalid_argument("max_negative_s: t > 0 required");
    return t * (t - s).pow(static_cast<long>(n) - 1);
}

std::vector<Rational> max_case_i_sequence(unsigned n_max, const Rational& s, const Rational& t) {
    if (n_max == 0) throw std::invalid_argument("max_case_i: n >= 1 required");
    if (s.sgn() <= 0 || s > t) throw std::invalid_argument("max_case_i: 0 < s <= t required");
    std::vector<Rational> m;
    m.reserve(n_max);
    m.push_back(t);
    if (n_max >= 2) m.push_back(t * t);
    Rational s2 = s * s;
    for (unsigned k = 3; k <= n_max; ++k) m.push_back(t * m[k - 2] + s2 * m[k - 3]);
    return m;
}

Rational max_case_i(unsigned n, const Rational& s, const Rational& t) {
    return max_case_i_sequence(n, s, t).back();
}

std::vector<Rational> max_case_ii_sequence(unsigned n_max, const Rational& s, const Rational& t) {
    if (n_max < 4) throw std::invalid_argument("max_case_ii: n >= 4 required");
    if (t.sgn() <= 0 || s < t) throw std::invalid_argument("max_case_ii: s >= t > 0 required");
    std::vector<Rational> m;
    m.reserve(n_max - 3);
    Rational s2 = s * s, t2 = t * t;
    m.push_back(Rational(3) * s2 * t2);
    if (n_max >= 5) m.push_back(s2 * s2 * t + Rational(4) * s2 * t2 * t);
    for (unsigned k = 6; k <= n_max; ++k) m.push_back(t * m[k - 5] + s2 * m[k - 6]);
    return m;
}

Rational max_case_ii(unsigned n, const Rational& s, const Rational& t) {
    return max_case_ii_sequence(n, s, t).back();
}

Rational max_case_iii(unsigned n, const Rational& s, const Rational& t, bool force) {
    if (n < 2) throw std::invalid_argument("max_case_iii: n >= 2 required");
    if (t.sgn() <= 0) throw std::invalid_argument("max_case_iii: t > 0 required");
    if (!force && s / t <= case_iii_threshold(n)) {
        throw std::invalid_argument("max_case_iii: ratio s/t must exceed (4/5) n^2 (use force to evaluate anyway)");
    }
    Rational v = s.pow(static_cast<long>(n) - 1) * t;
    std::uint64_t f = static_cast<std::uint64_t>(n / 2) * ((n - 1) / 2);
    if (f != 0) v += Rational(BigInt(static_cast<unsigned long>(f))) * s.pow(static_cast<long>(n) - 3) * t.pow(3);
    return v;
}

std::uint64_t chessboard_min_black(unsigned n) {
    if (n < 3) throw std::invalid_argument("chessboard_min_black: n >= 3 required");
    std::uint64_t nn = n;
    if (n % 2 == 1) return (nn * nn - 4 * nn + 3) / 4;
    return (nn * nn - 4 * nn + 4) / 4;
}

std::uint64_t coeff_bound_s3(unsigned n) {
    if (n < 3) throw std::invalid_argument("coeff_bound_s3: n >= 3 required");
    return static_cast<std::uint64_t>(n / 2) * ((n - 1) / 2);
}

namespace {

// sum over j in {first, first+2, ...} up to n-1 of C(n-1, j) x^(n-1-j)
Rational binomial_tail(unsigned n, const Rational& x, unsigned first) {
    Rational acc(0);
    for (unsigned j = first; j <= n - 1; j += 2) {
        acc += Rational(binomial(n - 1, j)) * x.pow(static_cast<long>(n) - 1 - static_cast<long>(j));
    }
    return acc;
}

} // namespace

RatioInequalities regime_inequalities(unsigned n, const Rational& x) {
    if (n < 2) throw std::invalid_argument("regime_inequalities: n >= 2 required");
    if (x.sgn() <= 0) throw std::invalid_argument("regime_inequalities: x > 0 required");
    Rational f(BigInt(static_cast<unsigned long>(n / 2) * ((n - 1) / 2)));
    Rational head = x.pow(static_cast<long>(n) - 1) + f * x.pow(static_cast<long>(n) - 3);
    Rational odd_tail = binomial_tail(n, x, 1);
    Rational even_tail = binomial_tail(n, x, 2);
    Rational tail4 = binomial_tail(n, x, 4);
    RatioInequalities r;
    r.ok[0] = head > odd_tail;
    r.ok[1] = head > even_tail;
    r.ok[2] = x.pow(static_cast<long>(n) - 2) + f * x.pow(static_cast<long>(n) - 3) > even_tail;
    r.ok[3] = x.pow(static_cast<long>(n) - 3) > tail4;
    r.ok[4] = x.pow(static_cast<long>(n) - 4) > tail4;
    return r;
}

bool coeff_growth_ok(const CoeffVector& cv) {
    for (unsigned m = 4; m + 1 <= cv.n; ++m) {
        unsigned __int128 lhs = static_cast<unsigned __int128>(cv.c[m - 1]) * cv.n;
        if (lhs < cv.c[m]) return false;
    }
    return true;
}

} // namespace hessmax
