#include "hessmax/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace hessmax {

std::size_t TemplateMask::free_count() const {
    std::size_t c = 0;
    for (int v : slots) c += (v < 0);
    return c;
}

TemplateMask build_template(unsigned n) {
    if (n < 5) throw std::invalid_argument("build_template: n >= 5 required");
    const unsigned k = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
    TemplateMask tm;
    tm.n = n;
    tm.slots.assign(HessMatrix::upper_count(n), 0);
    auto set = [&](unsigned i, unsigned j, int v) { tm.slots[HessMatrix::upper_slot(n, i - 1, j - 1)] = v; };
    for (unsigned j = 1; j <= k; ++j) set(1, j, 1);
    set(1, n, 1);
    for (unsigned i = 2; i <= k + 1; ++i) {
        for (unsigned j = k + 1; j <= n - 1; ++j) set(i, j, 1);
    }
    for (unsigned i = k + 2; i <= n; ++i) set(i, n, 1);
    for (unsigned i = 2; i <= k; ++i) {
        for (unsigned j = i; j <= k; ++j) set(i, j, -1);
    }
    for (unsigned i = k + 2; i <= n - 1; ++i) {
        for (unsigned j = i; j <= n - 1; ++j) set(i, j, -1);
    }
    return tm;
}

namespace {

unsigned long long env_ull(const char* name, unsigned long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long r = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0' || r == 0) return fallback;
    return r;
}

} // namespace

unsigned long long default_search_budget() { return env_ull("HESSMAX_BUDGET", 1ull << 30); }

unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<unsigned>(env_ull("HESSMAX_WORKERS", hw));
}

namespace {

// Shared, immutable per-search data.
struct Engine {
    unsigned n = 0;
    unsigned base = 2;
    bool collect_all = false;
    unsigned long long audit_stride = 0;
    Rational s;            // original subdiagonal
    Population pop;
    BigInt scaled_sub;     // s * D
    std::vector<BigInt> sub_pow; // scaled_sub^0 .. ^(n-1)
    std::vector<BigInt> val;     // scaled entry value per digit
    BigInt denom_pow;            // D^n  (H_1 of the scaled matrix = D^n * det)
    const TemplateMask* tmpl = nullptr;

    std::size_t slot(unsigned row, unsigned pos) const { // 1-based row, 0-based column offset
        return HessMatrix::upper_slot(n, row - 1, row - 1 + pos);
    }
};

struct Partial {
    bool valid = false;
    BigInt best;                   // max |H_1| over the region, scaled
    std::vector<BigInt> maximizers;
    unsigned long long ties = 0;
    unsigned long long leaves = 0;

    void merge(Partial&& o, bool collect_all) {
        const unsigned long long total_leaves = leaves + o.leaves;
        if (o.valid) {
            if (!valid) {
                *this = std::move(o);
            } else {
                int c = mpz_cmpabs(best.raw(), o.best.raw());
                if (c < 0) {
                    *this = std::move(o);
                } else if (c == 0) {
                    ties += o.ties;
                    if (collect_all) {
                        for (BigInt& m : o.maximizers) maximizers.push_back(std::move(m));
                    }
                }
            }
        }
        leaves = total_leaves;
    }
};

// One DFS worker; owns all mutable state for its region.
struct Walker {
    const Engine& eng;
    std::vector<BigInt> minors;       // minors[k] = H_k of the scaled matrix, k = 1..n+1
    std::vector<unsigned> digit;      // current digit per upper slot
    std::vector<std::vector<BigInt>> terms; // per row: term value per (pos, digit-1)
    std::vector<std::vector<BigInt>> accs;  // per row: partial-sum buffer per pos
    Partial out;

    explicit Walker(const Engine& e)
        : eng(e),
          minors(e.n + 2),
          digit(HessMatrix::upper_count(e.n), 0) {
        minors[e.n + 1] = BigInt(1);
        terms.resize(e.n + 1);
        accs.resize(e.n + 1);
        for (unsigned k = 1; k <= e.n; ++k) {
            unsigned width = e.n - k + 1;
            terms[k].assign(static_cast<std::size_t>(width) * (e.base - 1), BigInt(0));
            accs[k].assign(width + 1, BigInt(0));
        }
    }

    BigInt code_of_digits() const {
        BigInt code(0);
        for (std::size_t k = digit.size(); k-- > 0;) {
            mpz_mul_ui(code.raw(), code.raw(), eng.base);
            mpz_add_ui(code.raw(), code.raw(), digit[k]);
        }
        return code;
    }

    void audit_leaf(const BigInt& h1) const {
        std::vector<Rational> upper;
        upper.reserve(digit.size());
        for (unsigned d : digit) upper.push_back(eng.pop.value(d));
        HessMatrix m(eng.n, eng.s, std::move(upper));
        if (Rational(h1) != determinant(m) * Rational(eng.denom_pow)) {
            throw std::logic_error("search audit: incremental minor disagrees with determinant()");
        }
    }

    void leaf(const BigInt& h1) {
        ++out.leaves;
        if (eng.audit_stride && out.leaves % eng.audit_stride == 0) audit_leaf(h1);
        int c = out.valid ? mpz_cmpabs(h1.raw(), out.best.raw()) : 1;
        if (c > 0) {
            mpz_abs(out.best.raw(), h1.raw());
            out.valid = true;
            out.ties = 1;
            out.maximizers.clear();
            out.maximizers.push_back(code_of_digits());
        } else if (c == 0) {
            ++out.ties;
            if (eng.collect_all) out.maximizers.push_back(code_of_digits());
        }
    }

    // Prepares the per-position term values for row k from the minors of the
    // rows below: entry (k, k+pos) with digit d contributes
    // (-1)^pos * val[d] * sub^pos * H_{k+pos+1}.
    void prepare_row(unsigned k) {
        unsigned width = eng.n - k + 1;
        for (unsigned pos = 0; pos < width; ++pos) {
            BigInt base;
            mpz_mul(base.raw(), eng.sub_pow[pos].raw(), minors[k + pos + 1].raw());
            if (pos % 2 == 1) mpz_neg(base.raw(), base.raw());
            for (unsigned d = 1; d < eng.base; ++d) {
                mpz_mul(terms[k][static_cast<std::size_t>(pos) * (eng.base - 1) + d - 1].raw(),
                        eng.val[d].raw(), base.raw());
            }
        }
    }

    // Enumerates the fills of row k in ascending digit order (lowest slot
    // fastest), sharing partial sums from the most significant positions.
    void fill_row(unsigned k, unsigned width, int pos, const BigInt& acc) {
        if (pos < 0) {
            if (k > 1) {
                minors[k] = acc;
                descend(k - 1);
            } else {
                leaf(acc);
            }
            return;
        }
        std::size_t sl = eng.slot(k, static_cast<unsigned>(pos));
        int forced = eng.tmpl ? eng.tmpl->slots[sl] : -1;
        BigInt& buf = accs[k][static_cast<std::size_t>(pos)];
        for (unsigned d = 0; d < eng.base; ++d) {
            if (forced >= 0 && d != static_cast<unsigned>(forced)) continue;
            digit[sl] = d;
            if (d == 0) {
                fill_row(k, width, pos - 1, acc);
            } else {
                mpz_add(buf.raw(), acc.raw(),
                        terms[k][static_cast<std::size_t>(pos) * (eng.base - 1) + d - 1].raw());
                fill_row(k, width, pos - 1, buf);
            }
        }
    }

    void descend(unsigned k) {
        prepare_row(k);
        unsigned width = eng.n - k + 1;
        BigInt zero(0);
        fill_row(k, width, static_cast<int>(width) - 1, zero);
    }
};

// A frontier node: rows next_row+1..n already fixed.
struct Node {
    std::vector<BigInt> minors;
    std::vector<unsigned> digit;
    unsigned next_row = 0;
};

} // namespace

MaxRecord search_max(const SearchSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    if (spec.n == 0) throw std::invalid_argument("search: n >= 1 required");
    if (spec.tmpl) {
        if (spec.tmpl->n != spec.n) throw std::invalid_argument("search: template dimension mismatch");
        if (spec.pop.kind != Population::Kind::Binary) {
            throw std::invalid_argument("search: templates require a binary population");
        }
    }

    const unsigned long long budget = spec.budget ? spec.budget : default_search_budget();
    std::size_t free_slots = spec.tmpl ? spec.tmpl->free_count() : HessMatrix::upper_count(spec.n);
    BigInt space = BigInt(static_cast<long>(spec.pop.base())).pow(free_slots);
    if (space > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetExceeded("search: " + std::to_string(spec.pop.base()) + "^" + std::to_string(free_slots) +
                             " evaluations exceed the budget of " + std::to_string(budget) +
                             (spec.tmpl ? "; raise HESSMAX_BUDGET"
                                        : "; restrict with a template or raise HESSMAX_BUDGET"));
    }

    Engine eng;
    eng.n = spec.n;
    eng.base = spec.pop.base();
    eng.collect_all = spec.collect_all;
    eng.audit_stride = spec.audit_stride;
    eng.s = spec.s;
    eng.pop = spec.pop;
    eng.tmpl = spec.tmpl ? &*spec.tmpl : nullptr;

    // Clear denominators: the matrix scaled by D has integer entries and its
    // determinant is D^n times the original one.
    BigInt denom = spec.s.den();
    if (spec.pop.kind == Population::Kind::Binary) denom = lcm(denom, spec.pop.t.den());
    Rational scale{denom};
    {
        Rational ss = spec.s * scale;
        assert(ss.is_integer());
        eng.scaled_sub = ss.num();
    }
    eng.val.reserve(eng.base);
    for (unsigned d = 0; d < eng.base; ++d) {
        Rational v = spec.pop.value(d) * scale;
        assert(v.is_integer());
        eng.val.push_back(v.num());
    }
    eng.sub_pow.assign(spec.n, BigInt(1));
    for (unsigned k = 1; k < spec.n; ++k) eng.sub_pow[k] = eng.sub_pow[k - 1] * eng.scaled_sub;
    eng.denom_pow = denom.pow(spec.n);

    const unsigned workers = spec.workers ? spec.workers : default_workers();

    // Expand the first rows breadth-first until there is enough frontier to
    // keep every worker busy; each node then runs as an independent DFS.
    std::vector<Node> frontier;
    frontier.push_back(Node{std::vector<BigInt>(spec.n + 2), std::vector<unsigned>(HessMatrix::upper_count(spec.n), 0),
                            spec.n});
    frontier.front().minors[spec.n + 1] = BigInt(1);
    const std::size_t target = workers > 1 ? static_cast<std::size_t>(workers) * 4 : 1;
    while (frontier.size() < target && frontier.front().next_row > 1) {
        std::vector<Node> next;
        for (Node& node : frontier) {
            const unsigned k = node.next_row;
            const unsigned width = spec.n - k + 1;
            Walker w(eng);
            w.minors = node.minors;
            w.prepare_row(k);
            // Enumerate this row's fills directly via an odometer.
            std::vector<unsigned> fill(width, 0);
            for (;;) {
                bool ok = true;
                if (eng.tmpl) {
                    for (unsigned pos = 0; pos < width && ok; ++pos) {
                        int forced = eng.tmpl->slots[eng.slot(k, pos)];
                        if (forced >= 0 && fill[pos] != static_cast<unsigned>(forced)) ok = false;
                    }
                }
                if (ok) {
                    BigInt h(0);
                    for (unsigned pos = 0; pos < width; ++pos) {
                        if (fill[pos]) {
                            mpz_add(h.raw(), h.raw(),
                                    w.terms[k][static_cast<std::size_t>(pos) * (eng.base - 1) + fill[pos] - 1].raw());
                        }
                    }
                    Node child;
                    child.minors = node.minors;
                    child.minors[k] = std::move(h);
                    child.digit = node.digit;
                    for (unsigned pos = 0; pos < width; ++pos) child.digit[eng.slot(k, pos)] = fill[pos];
                    child.next_row = k - 1;
                    next.push_back(std::move(child));
                }
                unsigned pos = 0;
                while (pos < width && ++fill[pos] == eng.base) fill[pos++] = 0;
                if (pos == width) break;
            }
        }
        frontier = std::move(next);
    }

    // Process frontier nodes in parallel; results are keyed by node index so
    // the final fold is independent of scheduling.
    std::vector<Partial> results(frontier.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= frontier.size()) return;
            Walker w(eng);
            w.minors = frontier[i].minors;
            w.digit = frontier[i].digit;
            w.descend(frontier[i].next_row);
            results[i] = std::move(w.out);
        }
    };
    if (workers <= 1 || frontier.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        unsigned nthreads = std::min<std::size_t>(workers, frontier.size());
        pool.reserve(nthreads);
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }

    Partial total;
    for (Partial& p : results) total.merge(std::move(p), eng.collect_all);
    assert(total.valid);
    assert(BigInt(static_cast<unsigned long>(total.leaves)) == space);

    MaxRecord rec;
    rec.max_abs = Rational(total.best, eng.denom_pow);
    rec.maximizers = std::move(total.maximizers);
    std::sort(rec.maximizers.begin(), rec.maximizers.end());
    rec.count = total.ties;
    rec.evaluated = total.leaves;
    rec.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return rec;
}

void write_record(std::ostream& os, const SearchSpec& spec, const MaxRecord& rec, bool machine) {
    if (machine) {
        os << "n " << spec.n << "\n";
        os << "s " << spec.s.to_string() << "\n";
        os << "population " << spec.pop.describe() << "\n";
        os << "maxabs " << rec.max_abs.to_string() << "\n";
        os << "count " << rec.count << "\n";
        os << "maximizers";
        for (const BigInt& c : rec.maximizers) os << " " << c.to_string();
        os << "\n";
        os << "evaluated " << rec.evaluated << "\n";
        os << "elapsed-ms " << rec.elapsed.count() << "\n";
        return;
    }
    os << "search n=" << spec.n << " s=" << spec.s.to_string() << " population " << spec.pop.describe();
    if (spec.tmpl) os << " (template, " << spec.tmpl->free_count() << " free entries)";
    os << "\n";
    os << "  max |det| = " << rec.max_abs.to_string() << "\n";
    os << "  maximizers found: " << rec.count;
    if (!rec.maximizers.empty()) {
        os << " (listing " << rec.maximizers.size() << "):";
        for (const BigInt& c : rec.maximizers) os << " " << c.to_string();
    }
    os << "\n";
    os << "  evaluated " << rec.evaluated << " patterns in " << rec.elapsed.count() << " ms\n";
}

} // namespace hessmax
