#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hessmax/families.hpp"
#include "hessmax/oracles.hpp"
#include "support/brute.hpp"

#include <algorithm>

using namespace hessmax;
using hessmax::testsupport::Rng;

namespace {

bool has_tag(const std::vector<RegimeTag>& tags, RegimeTag t) {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

} // namespace

TEST_CASE("regime classification") {
    CHECK(has_tag(classify_regime(5, Rational(-1), Rational(1)), RegimeTag::NegativeS));
    CHECK(has_tag(classify_regime(5, Rational(0), Rational(1)), RegimeTag::NegativeS));
    CHECK(has_tag(classify_regime(5, Rational(1, 2), Rational(1)), RegimeTag::CaseI));
    auto boundary = classify_regime(5, Rational(3), Rational(3));
    CHECK(has_tag(boundary, RegimeTag::CaseI));
    CHECK(has_tag(boundary, RegimeTag::CaseII));
    CHECK(classify_regime(3, Rational(2), Rational(2)).size() == 1); // the double tag needs n >= 4
    CHECK(has_tag(classify_regime(4, Rational(100), Rational(1)), RegimeTag::CaseIII));
    CHECK(has_tag(classify_regime(4, Rational(2), Rational(1)), RegimeTag::Open));
    // a certified ratio bound turns Open into the post-unity regime
    CHECK(has_tag(classify_regime(4, Rational(2), Rational(1), Rational(2)), RegimeTag::CaseII));
    CHECK(has_tag(classify_regime(4, Rational(3), Rational(1), Rational(2)), RegimeTag::Open));
    CHECK_THROWS_AS(classify_regime(3, Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("negative-subdiagonal closed form") {
    CHECK(max_negative_s(1, Rational(-5), Rational(7)) == Rational(7));
    CHECK(max_negative_s(3, Rational(-1), Rational(1)) == Rational(4));
    CHECK(max_negative_s(4, Rational(-2), Rational(3)) == Rational(375));
    CHECK(max_negative_s(2, Rational(0), Rational(3)) == Rational(9)); // boundary s = 0
    CHECK_THROWS_AS(max_negative_s(3, Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("below-unity maxima sequences") {
    // s = t = 1: 1, 1, 2, 3, 5, 8
    std::vector<Rational> fib = max_case_i_sequence(6, Rational(1), Rational(1));
    long expect[6] = {1, 1, 2, 3, 5, 8};
    for (unsigned i = 0; i < 6; ++i) CHECK(fib[i] == Rational(expect[i]));
    // s = 1, t = 2: 2, 4, 10, 24, 58
    std::vector<Rational> g = max_case_i_sequence(5, Rational(1), Rational(2));
    long expect2[5] = {2, 4, 10, 24, 58};
    for (unsigned i = 0; i < 5; ++i) CHECK(g[i] == Rational(expect2[i]));
    // s = 1, t = d: the recurrence shape M_n = d M_{n-1} + M_{n-2}
    for (long d = 3; d <= 5; ++d) {
        std::vector<Rational> m = max_case_i_sequence(8, Rational(1), Rational(d));
        for (unsigned n = 3; n <= 8; ++n) CHECK(m[n - 1] == Rational(d) * m[n - 2] + m[n - 3]);
    }
    CHECK(max_case_i(5, Rational(1, 2), Rational(1)) == det_u(5, Rational(1, 2), Rational(1)));
    CHECK_THROWS_AS(max_case_i(3, Rational(2), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(max_case_i(3, Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("post-unity maxima") {
    CHECK(max_case_ii(4, Rational(1), Rational(1)) == Rational(3));
    CHECK(max_case_ii(5, Rational(1), Rational(1)) == Rational(5));
    // exact rational value just above unity
    CHECK(max_case_ii(6, Rational(101, 100), Rational(1)) == Rational(BigInt("206070401"), BigInt("25000000")));
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Rational t = rng.positive();
        Rational s = t * Rational(rng.integer(10, 30), 10);
        for (unsigned n = 4; n <= 12; ++n) CHECK(max_case_ii(n, s, t) == det_urc(n, s, t).abs());
    }
    CHECK_THROWS_AS(max_case_ii(3, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(max_case_ii(5, Rational(1), Rational(2)), std::invalid_argument);
}

TEST_CASE("large-ratio maxima") {
    CHECK(max_case_iii(6, Rational(100), Rational(1)) == Rational(BigInt("10006000000")));
    CHECK(max_case_iii(4, Rational(100), Rational(1)) == Rational(1000200));
    CHECK(max_case_iii(2, Rational(100), Rational(1)) == Rational(100));
    CHECK_THROWS_AS(max_case_iii(4, Rational(12), Rational(1)), std::invalid_argument);
    CHECK(max_case_iii(4, Rational(12), Rational(1), /*force=*/true) == det_w(4, Rational(12), Rational(1)).abs());
    Rng rng(13);
    for (unsigned n = 3; n <= 12; ++n) {
        Rational s = rng.positive(), t = rng.positive();
        CHECK(max_case_iii(n, s, t, true) == det_w(n, s, t).abs());
    }
}

TEST_CASE("blocked-cell counts") {
    CHECK(chessboard_min_black(9) == 12);
    CHECK(chessboard_min_black(8) == 9);
    CHECK(chessboard_min_black(3) == 0);
    CHECK_THROWS_AS(chessboard_min_black(2), std::invalid_argument);
}

TEST_CASE("third-coefficient bound") {
    CHECK(coeff_bound_s3(9) == 16);
    CHECK(coeff_bound_s3(8) == 12);
    CHECK(coeff_bound_s3(3) == 1);
    for (unsigned n = 3; n <= 16; ++n) {
        std::uint64_t pairs = static_cast<std::uint64_t>(n - 1) * (n - 2) / 2;
        CHECK(coeff_bound_s3(n) == pairs - chessboard_min_black(n));
        CHECK(coeff_bound_s3(n) == static_cast<std::uint64_t>(n / 2) * ((n - 1) / 2));
    }
}

TEST_CASE("tail-dominance inequalities") {
    {
        RatioInequalities r = regime_inequalities(5, Rational(21));
        CHECK(r.ok[0]);
        CHECK(r.ok[1]);
        CHECK(r.ok[2]);
        CHECK(r.ok[3]);
    }
    {
        // near-empty sums at n = 2
        RatioInequalities r = regime_inequalities(2, Rational(4));
        for (bool b : r.ok) CHECK(b);
    }
    {
        // n = 6: all five hold at x = 6, while the first fails at x = 4,
        // pinning where the leading inequality starts to bind.
        RatioInequalities at6 = regime_inequalities(6, Rational(6));
        for (bool b : at6.ok) CHECK(b);
        CHECK_FALSE(regime_inequalities(6, Rational(4)).ok[0]);
        CHECK(regime_inequalities(6, Rational(5)).ok[0]);
        // the last inequality needs larger ratios once n grows
        CHECK_FALSE(regime_inequalities(8, Rational(8)).ok[4]);
    }
    CHECK_THROWS_AS(regime_inequalities(1, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(regime_inequalities(4, Rational(0)), std::invalid_argument);
}

TEST_CASE("coefficient growth check") {
    CoeffVector trivial;
    trivial.n = 4;
    trivial.c = {1, 0, 2, 0};
    CHECK(coeff_growth_ok(trivial)); // vacuous below n = 5

    CoeffVector w9;
    w9.n = 9;
    w9.c = {1, 0, 16, 0, 0, 0, 0, 0, 0};
    CHECK(coeff_growth_ok(w9));

    CoeffVector zero;
    zero.n = 7;
    zero.c = {0, 0, 0, 0, 0, 0, 0};
    CHECK(coeff_growth_ok(zero));

    CoeffVector bad;
    bad.n = 6;
    bad.c = {1, 0, 6, 1, 30, 0}; // c_4 * 6 < c_5
    CHECK_FALSE(coeff_growth_ok(bad));
}
