// Exact real-root isolation for integer polynomials via Sturm sequences.

#ifndef HESSMAX_ROOTS_HPP
#define HESSMAX_ROOTS_HPP

#include "hessmax/polynomial.hpp"
#include "hessmax/scalar.hpp"

#include <optional>
#include <vector>

namespace hessmax {

// A rational interval certified to contain exactly one real root of the
// witness polynomial, which is square-free within the interval and has
// nonzero values of opposite sign at the endpoints.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    UniPoly witness;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) * Rational(1, 2); }
};

// Pairwise-disjoint isolating intervals, one per distinct real root of p in
// the closed range [lo, hi], sorted by position.  A root sitting exactly on
// lo or hi is reported with an interval extending slightly beyond the range.
// Multiplicities are collapsed (the square-free part of p is used).
std::vector<IsolatingInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& max_width);

// Shrinks the interval around the same root until hi - lo <= width.
// Intervals already narrow enough are returned unchanged.
IsolatingInterval refine_interval(IsolatingInterval iv, const Rational& width);

// All rational roots of p in [lo, hi], sorted ascending, found through the
// rational-root theorem.  Returns nullopt when the divisor enumeration would
// be too expensive (coefficients beyond ~10^12); exactness of downstream
// results is unaffected, only interval endpoints stay symbolic.
std::optional<std::vector<Rational>> rational_roots_in(const UniPoly& p, const Rational& lo, const Rational& hi);

// A point in the middle half of (lo, hi) with a power-of-two denominator of
// the interval's own scale.  Used as the cut point wherever intervals are
// bisected repeatedly: exact midpoints compound denominators multiplicatively,
// dyadic cuts keep endpoint sizes linear in the number of steps.
Rational dyadic_between(const Rational& lo, const Rational& hi);

} // namespace hessmax

#endif
