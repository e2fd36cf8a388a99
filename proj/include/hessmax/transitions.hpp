// Exact exploration of the open ratio regime: which determinant polynomial
// |q(x)| is largest as the ratio x = s/t varies, where the transition points
// sit, and how far past x = 1 the post-unity maximizer persists.
//
// The upper envelope is computed by an exact sweep: the current leader is
// compared against every other candidate through the integer polynomial
// q_L^2 - q_r^2, whose roots are isolated with Sturm sequences; the earliest
// sign change from + to - is the next breakpoint.  Rational breakpoints are
// recognized exactly, irrational ones are reported as isolating intervals.

#ifndef HESSMAX_TRANSITIONS_HPP
#define HESSMAX_TRANSITIONS_HPP

#include "hessmax/polynomial.hpp"
#include "hessmax/roots.hpp"
#include "hessmax/scalar.hpp"
#include "hessmax/search.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace hessmax {

// One distinct determinant polynomial together with the smallest pattern
// code realizing it and how many patterns share it.
struct PolyClass {
    UniPoly poly;
    BigInt smallest_code;
    unsigned long long pattern_count = 0;
};

struct Breakpoint {
    Rational lo, hi;               // enclosure of the transition ratio
    std::optional<Rational> exact; // set when the ratio is rational
    UniPoly witness;               // square-free, single sign-changing root in (lo, hi)
};

struct EnvelopeSegment {
    std::size_t cls = 0; // index into TransitionDiagram::classes
    Rational sample;     // interior rational point where the leader strictly wins
};

// A candidate matching the leader's magnitude at an isolated interior point
// without taking over; reported for completeness, does not split segments.
struct EnvelopeTouch {
    std::size_t cls = 0;
    Rational lo, hi;
};

struct TransitionDiagram {
    unsigned n = 0;
    Rational window_lo, window_hi;
    std::vector<PolyClass> classes;
    std::vector<EnvelopeSegment> segments; // segments.size() == breakpoints.size() + 1
    std::vector<Breakpoint> breakpoints;
    std::vector<EnvelopeTouch> touches;
    bool candidate_restricted = false;
};

struct EnvelopeOptions {
    unsigned long long budget = 0; // 0 = default_search_budget()
    unsigned workers = 0;          // 0 = default_workers()
    // Fallback for spaces whose full deduplication is too large: candidates
    // are the search winners at a ratio grid plus the named constructions.
    bool restrict_candidates = false;
    unsigned grid_points = 8;
};

// All distinct determinant polynomials of {0,1}-patterns at dimension n,
// ordered by smallest code.  Deduplication is chunk-parallel with a
// deterministic merge.
std::vector<PolyClass> distinct_polynomials(unsigned n, unsigned long long budget = 0, unsigned workers = 0);

// Envelope of |q(x)| over an explicit candidate set on [xlo, xhi].
TransitionDiagram envelope_of(std::vector<PolyClass> classes, unsigned n, const Rational& xlo,
                              const Rational& xhi);

// Envelope over all pattern polynomials at dimension n (deduplicated), or
// over the restricted candidate set when opts.restrict_candidates is set.
TransitionDiagram envelope(unsigned n, const Rational& xlo, const Rational& xhi,
                           const EnvelopeOptions& opts = {});

// Supremum ratio x* > 1 below which the maximizer that takes over at x = 1
// stays on the envelope; scans (1, (4/5) n^2].  When no transition exists in
// the window, found is false and the window edge is reported.
struct SecondTransition {
    bool found = false;
    std::optional<Rational> exact;
    Rational lo, hi;
    Rational window_hi;
    UniPoly first_leader; // the polynomial leading just right of x = 1
};

SecondTransition second_transition(unsigned n, const EnvelopeOptions& opts = {});

// Exhaustive maximizer record at ratio x (search at s = x, t = 1; the
// maximizer set depends on the ratio alone by homogeneity).
MaxRecord maximizers_at_ratio(unsigned n, const Rational& x, bool collect_all = true, unsigned workers = 0,
                              unsigned long long budget = 0);

void write_diagram(std::ostream& os, const TransitionDiagram& d, bool machine);

} // namespace hessmax

#endif
