// Closed-form maximum-determinant values for the solved parameter regimes,
// regime classification, and the standalone combinatorial bounds.

#ifndef HESSMAX_ORACLES_HPP
#define HESSMAX_ORACLES_HPP

#include "hessmax/matrix.hpp"
#include "hessmax/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hessmax {

enum class RegimeTag { NegativeS, CaseI, CaseII, CaseIII, Open };

std::string regime_name(RegimeTag r);

// Tags applicable to (n, s, t).  The boundary s = t belongs to both CaseI
// and (for n >= 4) CaseII.  Ratios in (1, 4n^2/5] classify as Open unless
// the caller supplies a certified ratio bound x* > 1 (obtained from the
// transition explorer), in which case ratios up to x* report CaseII.
std::vector<RegimeTag> classify_regime(unsigned n, const Rational& s, const Rational& t,
                                       const std::optional<Rational>& certified_ratio = std::nullopt);

// Maximum |det| over upper entries in [0, t] with subdiagonal s <= 0:
// t (t - s)^(n-1).
Rational max_negative_s(unsigned n, const Rational& s, const Rational& t);

// Maximum for 0 < s <= t via the two-term recurrence
// M_1 = t, M_2 = t^2, M_n = t M_{n-1} + s^2 M_{n-2}.
Rational max_case_i(unsigned n, const Rational& s, const Rational& t);
std::vector<Rational> max_case_i_sequence(unsigned n_max, const Rational& s, const Rational& t);

// Maximum for s slightly above t (n >= 4): seeds M_4 = 3 s^2 t^2,
// M_5 = s^4 t + 4 s^2 t^3, then the same two-term recurrence.  The range of
// validity above s = t is only known empirically; see the transitions module.
Rational max_case_ii(unsigned n, const Rational& s, const Rational& t);
std::vector<Rational> max_case_ii_sequence(unsigned n_max, const Rational& s, const Rational& t);

// Maximum for s/t > (4/5) n^2:
// s^(n-1) t + floor(n/2) floor((n-1)/2) s^(n-3) t^3.
// Throws below the ratio threshold unless force is set.
Rational max_case_iii(unsigned n, const Rational& s, const Rational& t, bool force = false);

// Ratio threshold (4/5) n^2 used by the classifier.
Rational case_iii_threshold(unsigned n);

// Minimum number of blocked cells in the triangular chessboard argument:
// (n^2-4n+3)/4 for odd n, (n^2-4n+4)/4 for even n.  n >= 3.
std::uint64_t chessboard_min_black(unsigned n);

// floor(n/2) floor((n-1)/2) = C(n-1, 2) - chessboard_min_black(n); the upper
// bound on the third graded coefficient when the second one vanishes.
std::uint64_t coeff_bound_s3(unsigned n);

// The five tail-dominance inequalities at ratio x = s/t, evaluated exactly.
// Index order matches the regime analysis: the first two compare
// x^(n-1) + F x^(n-3) against the odd and even binomial tails, the third
// starts from x^(n-2), the last two compare x^(n-3) and x^(n-4) against the
// tail from the fourth coefficient on (F = floor(n/2) floor((n-1)/2)).
struct RatioInequalities {
    std::array<bool, 5> ok{};
    static constexpr std::array<const char*, 5> labels = {
        "x^(n-1)+F*x^(n-3) > odd-tail", "x^(n-1)+F*x^(n-3) > even-tail", "x^(n-2)+F*x^(n-3) > even-tail",
        "x^(n-3) > tail-from-4", "x^(n-4) > tail-from-4"};
};

RatioInequalities regime_inequalities(unsigned n, const Rational& x);

// Coefficient growth check for template-form matrices: c_m * n >= c_{m+1}
// for all m in {4, ..., n-1}.  Vacuously true when n < 5.
bool coeff_growth_ok(const CoeffVector& cv);

} // namespace hessmax

#endif
