// Exhaustive, exact maximizer search over finite-population upper Hessenberg
// families.
//
// The search walks the pattern space as a DFS that fixes one row at a time,
// bottom row first, maintaining the trailing-minor state incrementally; the
// bottom rows carry the most significant code digits, so DFS order is
// ascending code order and prefix partitions split the space by high-order
// digits.  All arithmetic is over scaled integers (denominators cleared up
// front), so results are exact for any rational s and t.

#ifndef HESSMAX_SEARCH_HPP
#define HESSMAX_SEARCH_HPP

#include "hessmax/matrix.hpp"
#include "hessmax/scalar.hpp"

#include <chrono>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hessmax {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-slot entry restriction: -1 free, otherwise the forced digit.
struct TemplateMask {
    unsigned n = 0;
    std::vector<int> slots;

    std::size_t free_count() const;
};

// Template of the near-maximizer structure for large ratios: forced t's in
// the first row, the centered t-block and the trailing column, forced zeros
// elsewhere, and two free triangular regions.  The all-zero free fill
// realizes the W family exactly.  Requires n >= 5.
TemplateMask build_template(unsigned n);

// Environment defaults: HESSMAX_BUDGET (max evaluations, default 2^30) and
// HESSMAX_WORKERS (default: hardware concurrency).
unsigned long long default_search_budget();
unsigned default_workers();

struct SearchSpec {
    unsigned n = 0;
    Rational s;
    Population pop = Population::binary(Rational(1));

    bool collect_all = false;      // keep every maximizing code, not just the smallest
    unsigned workers = 0;          // 0 = default_workers()
    unsigned long long budget = 0; // 0 = default_search_budget()
    std::optional<TemplateMask> tmpl;
    unsigned long long audit_stride = 0; // >0: cross-check every k-th leaf against determinant()
};

struct MaxRecord {
    Rational max_abs;
    std::vector<BigInt> maximizers; // ascending codes; all of them under collect_all
    unsigned long long count = 0;   // number of maximizing patterns found
    unsigned long long evaluated = 0;
    std::chrono::milliseconds elapsed{0};
};

// Deterministic for a given spec regardless of worker count: partitions are
// merged associatively (max of the maxima, tie lists concatenated in code
// order).
MaxRecord search_max(const SearchSpec& spec);

void write_record(std::ostream& os, const SearchSpec& spec, const MaxRecord& rec, bool machine);

} // namespace hessmax

#endif
