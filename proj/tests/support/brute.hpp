// Test-only oracles and generators, kept independent of the library's own
// determinant paths.

#ifndef HESSMAX_TESTS_BRUTE_HPP
#define HESSMAX_TESTS_BRUTE_HPP

#include "hessmax/matrix.hpp"
#include "hessmax/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace hessmax::testsupport {

// Determinant as the signed sum over all n! permutations.
inline Rational permutation_determinant(const HessMatrix& m) {
    const unsigned n = m.dim();
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    Rational acc(0);
    do {
        int inversions = 0;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        Rational prod(1);
        bool zero = false;
        for (unsigned i = 0; i < n && !zero; ++i) {
            Rational e = m.entry(i, perm[i]);
            if (e.is_zero()) {
                zero = true;
            } else {
                prod *= e;
            }
        }
        if (!zero) {
            if (inversions % 2) {
                acc -= prod;
            } else {
                acc += prod;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

    Rational positive(long cap = 12) {
        std::uniform_int_distribution<long> d(1, cap);
        return Rational(d(g), d(g));
    }
    Rational any(long cap = 12) {
        std::uniform_int_distribution<long> num(-cap, cap);
        std::uniform_int_distribution<long> den(1, cap);
        return Rational(num(g), den(g));
    }
    Rational nonzero(long cap = 12) {
        for (;;) {
            Rational r = any(cap);
            if (!r.is_zero()) return r;
        }
    }
    // 0 < s <= t
    std::pair<Rational, Rational> ratio_below_unity() {
        Rational t = positive();
        long a = integer(1, 24), b = integer(1, 24);
        if (a > b) std::swap(a, b);
        return {t * Rational(a, b), t};
    }

    HessMatrix random_matrix(unsigned n, const Rational& s, long cap = 6) {
        HessMatrix m(n, s);
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i; j < n; ++j) m.set_upper(i, j, any(cap));
        }
        return m;
    }

    EntryPattern random_binary_pattern(unsigned n, const Rational& t) {
        const std::size_t slots = HessMatrix::upper_count(n);
        std::vector<unsigned> dg(slots);
        for (std::size_t k = 0; k < slots; ++k) dg[k] = static_cast<unsigned>(integer(0, 1));
        return EntryPattern::from_digits(n, Population::binary(t), dg);
    }
};

} // namespace hessmax::testsupport

#endif
