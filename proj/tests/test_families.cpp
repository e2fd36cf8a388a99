#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hessmax/families.hpp"
#include "support/brute.hpp"

using namespace hessmax;
using hessmax::testsupport::Rng;

namespace {

void check_rows(const HessMatrix& m, std::initializer_list<long> rows, const Rational& s, const Rational& t) {
    REQUIRE(rows.size() == static_cast<std::size_t>(m.dim()) * m.dim());
    auto it = rows.begin();
    for (unsigned i = 0; i < m.dim(); ++i) {
        for (unsigned j = 0; j < m.dim(); ++j, ++it) {
            Rational want = *it == 2 ? s : (*it == 1 ? t : Rational(0));
            CHECK(m.entry(i, j) == want);
        }
    }
}

} // namespace

TEST_CASE("family displays") {
    Rational s(7, 2), t(5, 3);
    // alternating family, n = 3: rows (t,0,t), (s,t,0), (0,s,t)
    check_rows(build_family(Family::U, 3, s, t), {1, 0, 1, 2, 1, 0, 0, 2, 1}, s, t);
    // fan family, n = 4
    check_rows(build_family(Family::V, 4, s, t), {1, 1, 1, 0, 2, 0, 0, 1, 0, 2, 0, 1, 0, 0, 2, 1}, s, t);
    // block family, n = 5: 2x2 block of t in rows 2..3, columns 3..4
    check_rows(build_family(Family::W, 5, s, t),
               {1, 1, 0, 0, 1, 2, 0, 1, 1, 0, 0, 2, 1, 1, 0, 0, 0, 2, 0, 1, 0, 0, 0, 2, 1}, s, t);
    // swapped variants at n = 4
    check_rows(build_family(Family::Ur, 4, s, t), {1, 1, 0, 1, 2, 0, 1, 0, 0, 2, 1, 0, 0, 0, 2, 1}, s, t);
    check_rows(build_family(Family::Uc, 4, s, t), {1, 0, 0, 1, 2, 1, 1, 0, 0, 2, 0, 1, 0, 0, 2, 1}, s, t);
    check_rows(build_family(Family::Urc, 4, s, t), {1, 1, 1, 0, 2, 0, 0, 1, 0, 2, 0, 1, 0, 0, 2, 1}, s, t);
    // even block family and its transposed-block twin
    check_rows(build_family(Family::W, 4, s, t), {1, 0, 0, 1, 2, 1, 1, 0, 0, 2, 0, 1, 0, 0, 2, 1}, s, t);
    check_rows(build_family(Family::Wprime, 4, s, t), {1, 1, 0, 1, 2, 0, 1, 0, 0, 2, 1, 0, 0, 0, 2, 1}, s, t);
}

TEST_CASE("dimension preconditions") {
    CHECK_THROWS_AS(build_family(Family::Urc, 3, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_family(Family::Ur, 3, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_family(Family::V, 1, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_family(Family::W, 2, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_family(Family::Wprime, 5, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_NOTHROW(build_family(Family::U, 1, Rational(1), Rational(1)));
}

TEST_CASE("family name round trip") {
    for (Family f : {Family::U, Family::Ur, Family::Uc, Family::Urc, Family::V, Family::W, Family::Wprime}) {
        auto back = family_from_name(family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK(!family_from_name("X").has_value());
}

TEST_CASE("two-term recurrence values") {
    CHECK(det_u(0, Rational(3), Rational(2)) == Rational(0));
    CHECK(det_u(1, Rational(3), Rational(2)) == Rational(2));
    CHECK(det_u(4, Rational(1), Rational(1)) == Rational(3));
    // seeds 2, 4 with multiplier 2: 2, 4, 10, 24, 58
    CHECK(det_u(5, Rational(1), Rational(2)) == Rational(58));
    // the alternating family's determinant polynomial at n = 4
    UniPoly q = det_polynomial(
        pattern_of(build_family(Family::U, 4, Rational(1), Rational(1)), Population::binary(Rational(1))));
    CHECK(q == UniPoly{1, 0, 2});
    CHECK(q.eval(Rational(1)) == Rational(3));
}

TEST_CASE("swapped-variant determinant magnitudes") {
    CHECK(det_ur(4, Rational(1), Rational(1)).abs() == Rational(3));
    CHECK(det_uc(4, Rational(1), Rational(1)).abs() == Rational(3));
    CHECK(det_ur(5, Rational(1), Rational(1)).abs() == Rational(5));
    CHECK(det_uc(5, Rational(1), Rational(1)).abs() == Rational(5));
    CHECK(det_ur(4, Rational(2), Rational(1)).abs() == Rational(12));
}

TEST_CASE("double-swap closed form") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Rational s = rng.any(), t = rng.any();
        Rational s2 = s * s, t2 = t * t;
        CHECK(det_urc(4, s, t) == Rational(3) * s2 * t2);
        CHECK(det_urc(5, s, t) == s2 * s2 * t + Rational(4) * s2 * t2 * t);
        for (unsigned n = 6; n <= 12; ++n) {
            CHECK(det_urc(n, s, t) == t * det_urc(n - 1, s, t) + s2 * det_urc(n - 2, s, t));
        }
    }
    CHECK(det_urc(6, Rational(1), Rational(1)) == Rational(8));
}

TEST_CASE("fan family closed form") {
    CHECK(det_v(2, Rational(9), Rational(7, 2)) == Rational(49, 4)); // t^2 regardless of s
    Rational s(7, 3), t(2, 5);
    CHECK(det_v(4, s, t) == Rational(3) * t * t * s * s);
    CHECK(det_v(5, Rational(2), Rational(3)) == Rational(-288));
}

TEST_CASE("block family closed form") {
    Rational one(1);
    CHECK(det_w(5, Rational(2), Rational(3)) == Rational(16 * 3) + Rational(4 * 4 * 27)); // s^4 t + 4 s^2 t^3
    CHECK(det_w(6, Rational(100), one) == Rational(BigInt("-10006000000")));
    CHECK(det_w(3, one, one) == Rational(2));
    // Peeling one dimension off flips the sign and adds the fan term.
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Rational s = rng.any(), t = rng.any();
        for (unsigned n = 4; n <= 12; ++n) {
            Rational lhs = det_w(n, s, t);
            Rational rhs =
                Rational(static_cast<long>((n - 1) / 2)) * (-s).pow(static_cast<long>(n) - 3) * t.pow(3) -
                s * det_w(n - 1, s, t);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("closed forms equal the exact determinants") {
    Rng rng(29);
    for (Family f : {Family::U, Family::Ur, Family::Uc, Family::Urc, Family::V, Family::W, Family::Wprime}) {
        for (unsigned n = family_min_dim(f); n <= 8; ++n) {
            if (f == Family::Wprime && n % 2 != 0) continue;
            for (int trial = 0; trial < 5; ++trial) {
                bool positive_only = f == Family::Ur || f == Family::Uc;
                Rational s = positive_only ? rng.positive() : rng.any();
                Rational t = positive_only ? rng.positive() : rng.any();
                CAPTURE(family_name(f));
                CAPTURE(n);
                CHECK(family_det(f, n, s, t) == determinant(build_family(f, n, s, t)));
            }
        }
    }
}

TEST_CASE("variant magnitudes relative to the base family") {
    Rng rng(41);
    for (unsigned n = 4; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            Rational t = rng.positive();
            // strictly above unity ratio: s > t
            Rational s = t * Rational(rng.integer(11, 19), 10);
            CHECK(det_urc(n, s, t) > det_u(n, s, t));
            // within (1, 2): double swap beats single swaps, which agree
            CHECK(det_urc(n, s, t).abs() > det_ur(n, s, t).abs());
            CHECK(det_ur(n, s, t).abs() == det_uc(n, s, t).abs());
            // magnitude identity for the single swaps
            Rational expected = s * det_u(n - 1, s, t) + t * s * det_u(n - 2, s, t);
            CHECK(det_ur(n, s, t).abs() == expected);
        }
    }
}

TEST_CASE("both block orientations share the determinant") {
    Rng rng(59);
    for (unsigned n = 4; n <= 12; n += 2) {
        Rational s = rng.any(), t = rng.any();
        CHECK(determinant(build_family(Family::W, n, s, t)) == determinant(build_family(Family::Wprime, n, s, t)));
    }
}
