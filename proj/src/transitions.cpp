#include "hessmax/transitions.hpp"

#include "hessmax/families.hpp"
#include "hessmax/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <ostream>
#include <thread>

namespace hessmax {

namespace {

UniPoly poly_from_coeff_counts(unsigned n, const std::vector<std::uint64_t>& c) {
    CoeffVector cv;
    cv.n = n;
    cv.c = c;
    return det_polynomial(cv);
}

} // namespace

std::vector<PolyClass> distinct_polynomials(unsigned n, unsigned long long budget, unsigned workers) {
    if (n == 0) throw std::invalid_argument("distinct_polynomials: n >= 1 required");
    const std::size_t slots = HessMatrix::upper_count(n);
    if (slots >= 63) throw BudgetExceeded("distinct_polynomials: pattern space too large");
    if (!budget) budget = default_search_budget();
    const std::uint64_t space = 1ull << slots;
    if (space > budget) {
        throw BudgetExceeded("distinct_polynomials: 2^" + std::to_string(slots) +
                             " patterns exceed the budget of " + std::to_string(budget));
    }
    if (!workers) workers = default_workers();

    struct Entry {
        std::uint64_t min_code;
        unsigned long long count;
    };
    using Map = std::map<std::vector<std::uint64_t>, Entry>;

    const unsigned chunks = std::max(1u, workers);
    std::vector<Map> maps(chunks);
    std::atomic<unsigned> cursor{0};
    auto work = [&]() {
        for (;;) {
            unsigned c = cursor.fetch_add(1);
            if (c >= chunks) return;
            std::uint64_t lo = space / chunks * c + std::min<std::uint64_t>(c, space % chunks);
            std::uint64_t hi = lo + space / chunks + (c < space % chunks ? 1 : 0);
            Map& m = maps[c];
            for (std::uint64_t code = lo; code < hi; ++code) {
                std::vector<std::uint64_t> key = path_coefficients_bits(n, code).c;
                auto [it, inserted] = m.try_emplace(std::move(key), Entry{code, 1});
                if (!inserted) ++it->second.count; // ascending scan keeps the smallest code
            }
        }
    };
    if (chunks == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < std::min(workers, chunks); ++i) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }

    Map total;
    for (Map& m : maps) {
        for (auto& [key, entry] : m) {
            auto [it, inserted] = total.try_emplace(key, entry);
            if (!inserted) {
                it->second.count += entry.count;
                it->second.min_code = std::min(it->second.min_code, entry.min_code);
            }
        }
    }

    std::vector<PolyClass> classes;
    classes.reserve(total.size());
    for (const auto& [key, entry] : total) {
        PolyClass pc;
        pc.poly = poly_from_coeff_counts(n, key);
        pc.smallest_code = BigInt(static_cast<unsigned long>(entry.min_code));
        pc.pattern_count = entry.count;
        classes.push_back(std::move(pc));
    }
    std::sort(classes.begin(), classes.end(),
              [](const PolyClass& a, const PolyClass& b) { return a.smallest_code < b.smallest_code; });
    return classes;
}

namespace {

// Sign of (p - q) immediately to the right of x: the first nonvanishing
// derivative of the difference decides.
int sign_just_right(const UniPoly& p, const UniPoly& q, const Rational& x) {
    UniPoly d = p - q;
    while (!d.is_zero()) {
        int s = d.sign_at(x);
        if (s != 0) return s;
        d = d.derivative();
    }
    return 0;
}

struct OvertakeEvent {
    std::size_t rival = 0;
    IsolatingInterval iv;
};

struct Sweeper {
    const std::vector<PolyClass>& cls;
    Rational xlo, xhi;
    std::vector<UniPoly> sq; // |q_i|^2

    TransitionDiagram diagram;

    explicit Sweeper(const std::vector<PolyClass>& classes, unsigned n, Rational lo, Rational hi)
        : cls(classes), xlo(std::move(lo)), xhi(std::move(hi)) {
        sq.reserve(cls.size());
        for (const PolyClass& c : cls) sq.push_back(c.poly.square());
        diagram.n = n;
        diagram.window_lo = xlo;
        diagram.window_hi = xhi;
        diagram.classes = cls;
    }

    std::size_t leader_just_right(const Rational& x) const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < cls.size(); ++i) {
            if (sign_just_right(sq[i], sq[best], x) > 0) best = i;
        }
        return best;
    }

    // First root of sq[lead] - sq[rival] in (a, xhi) across which the sign
    // turns negative.  Sign-preserving roots are collected as touches.
    std::optional<OvertakeEvent> first_overtake(std::size_t lead, std::size_t rival, const Rational& a,
                                                std::vector<EnvelopeTouch>& touch_candidates) const {
        UniPoly d = sq[lead] - sq[rival];
        assert(!d.is_zero());
        for (IsolatingInterval& iv : isolate_roots(d, a, xhi, xhi - a)) {
            if (iv.lo < a || iv.hi > xhi) continue; // root exactly on the window edge
            int after = d.sign_at(iv.hi);
            assert(after != 0);
            if (after < 0) return OvertakeEvent{rival, std::move(iv)};
            touch_candidates.push_back(EnvelopeTouch{rival, iv.lo, iv.hi});
        }
        return std::nullopt;
    }

    static bool same_root(const IsolatingInterval& a, const IsolatingInterval& b) {
        Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        if (!(lo < hi)) return false;
        UniPoly g = poly_gcd(a.witness, b.witness);
        if (g.degree() < 1) return false;
        return roots_in(sturm_chain(g), lo, hi) >= 1;
    }

    // Shrinks the enclosure of the chosen breakpoint until the sweep can
    // safely resume at its right endpoint (see conditions in place).
    struct RefinedBreak {
        Rational lo, hi;
        std::optional<Rational> exact;
    };

    RefinedBreak refine_for_continuation(const OvertakeEvent& ev, const std::vector<std::size_t>& group,
                                         const Rational& a) const {
        const UniPoly& w = ev.iv.witness;
        Rational blo = ev.iv.lo, bhi = ev.iv.hi;
        int sign_lo = w.sign_at(blo);
        std::optional<Rational> exact;

        std::vector<std::vector<UniPoly>> pair_chains; // within group: pairwise chains
        std::vector<UniPoly> pair_d;                   // the differences themselves
        for (std::size_t u = 0; u < group.size(); ++u) {
            for (std::size_t v = u + 1; v < group.size(); ++v) {
                UniPoly d = sq[group[u]] - sq[group[v]];
                pair_chains.push_back(sturm_chain(squarefree_part(d)));
                pair_d.push_back(std::move(d));
            }
        }
        std::vector<std::vector<UniPoly>> outsider_chains(cls.size());
        std::vector<UniPoly> outsider_d(cls.size());
        const std::size_t lead = group.front();
        for (std::size_t r = 0; r < cls.size(); ++r) {
            if (std::find(group.begin(), group.end(), r) != group.end()) continue;
            outsider_d[r] = sq[lead] - sq[r];
            outsider_chains[r] = sturm_chain(squarefree_part(outsider_d[r]));
        }

        auto conditions_hold = [&]() {
            if (!(a < blo) || !(bhi < xhi)) return false;
            for (std::size_t r = 0; r < cls.size(); ++r) {
                if (outsider_chains[r].empty()) continue;
                if (outsider_d[r].sign_at(blo) == 0) return false;
                if (roots_in(outsider_chains[r], blo, bhi) != 0) return false;
            }
            for (std::size_t k = 0; k < pair_chains.size(); ++k) {
                if (pair_d[k].sign_at(blo) == 0) return false;
                if (roots_in(pair_chains[k], blo, bhi) != 1) return false;
            }
            return true;
        };

        while (!conditions_hold()) {
            if (exact) {
                Rational h = (bhi - blo) * Rational(1, 4);
                blo = *exact - h;
                bhi = *exact + h;
                continue;
            }
            Rational mid = dyadic_between(blo, bhi);
            int sm = w.sign_at(mid);
            if (sm == 0) {
                exact = mid;
                Rational h = (bhi - blo) * Rational(1, 8);
                blo = mid - h;
                bhi = mid + h;
                continue;
            }
            (sm == sign_lo ? blo : bhi) = mid;
        }

        if (!exact) {
            if (auto rr = rational_roots_in(w, blo, bhi); rr && !rr->empty()) {
                assert(rr->size() == 1);
                exact = rr->front();
            }
        }
        return RefinedBreak{std::move(blo), std::move(bhi), std::move(exact)};
    }

    // A rational point in (a, limit) where the leader strictly exceeds all
    // other candidates; nudges toward a past any isolated equality.
    Rational certified_sample(std::size_t lead, const Rational& a, const Rational& limit) const {
        Rational x = dyadic_between(a, limit);
        for (;;) {
            bool tie = false;
            Rational lv = sq[lead].eval(x);
            for (std::size_t i = 0; i < cls.size(); ++i) {
                if (i == lead) continue;
                Rational rv = sq[i].eval(x);
                if (rv > lv) {
                    throw std::logic_error("envelope: certification failed, candidate above the leader");
                }
                if (rv == lv) {
                    tie = true;
                    break;
                }
            }
            if (!tie) return x;
            x = dyadic_between(a, x);
        }
    }

    void run() {
        Rational a = xlo;
        std::size_t lead = leader_just_right(a);
        for (;;) {
            std::vector<EnvelopeTouch> touch_candidates;
            std::optional<OvertakeEvent> earliest;
            std::vector<std::size_t> tied;
            for (std::size_t r = 0; r < cls.size(); ++r) {
                if (r == lead) continue;
                auto ev = first_overtake(lead, r, a, touch_candidates);
                if (!ev) continue;
                if (!earliest) {
                    earliest = std::move(ev);
                    tied.assign(1, r);
                    continue;
                }
                // Order the two events, refining until disjoint or provably equal.
                for (;;) {
                    if (same_root(earliest->iv, ev->iv)) {
                        tied.push_back(r);
                        break;
                    }
                    if (ev->iv.hi <= earliest->iv.lo) {
                        earliest = std::move(ev);
                        tied.assign(1, r);
                        break;
                    }
                    if (earliest->iv.hi <= ev->iv.lo) break; // keep current
                    Rational quarter_a = earliest->iv.width() * Rational(1, 4);
                    Rational quarter_b = ev->iv.width() * Rational(1, 4);
                    earliest->iv = refine_interval(std::move(earliest->iv), quarter_a);
                    ev->iv = refine_interval(std::move(ev->iv), quarter_b);
                }
            }

            if (!earliest) {
                for (EnvelopeTouch& t : touch_candidates) diagram.touches.push_back(std::move(t));
                diagram.segments.push_back(EnvelopeSegment{lead, certified_sample(lead, a, xhi)});
                break;
            }

            std::vector<std::size_t> group;
            group.push_back(lead);
            for (std::size_t r : tied) group.push_back(r);
            RefinedBreak rb = refine_for_continuation(*earliest, group, a);

            for (EnvelopeTouch& t : touch_candidates) {
                if (t.hi <= rb.lo) diagram.touches.push_back(std::move(t));
            }
            diagram.segments.push_back(EnvelopeSegment{lead, certified_sample(lead, a, rb.lo)});
            diagram.breakpoints.push_back(Breakpoint{rb.lo, rb.hi, rb.exact, earliest->iv.witness});

            // New leader: the group member with the largest value at the
            // enclosure's right endpoint (strictly ordered by construction).
            std::size_t next = group.front();
            Rational best_v = sq[next].eval(rb.hi);
            for (std::size_t g : group) {
                Rational v = sq[g].eval(rb.hi);
                if (v > best_v) {
                    best_v = std::move(v);
                    next = g;
                }
            }
            assert(next != lead);
            a = rb.hi;
            lead = next;
        }
    }
};

} // namespace

TransitionDiagram envelope_of(std::vector<PolyClass> classes, unsigned n, const Rational& xlo,
                              const Rational& xhi) {
    if (classes.empty()) throw std::invalid_argument("envelope: no candidates");
    if (!(xlo < xhi)) throw std::invalid_argument("envelope: empty window");
    Sweeper sw(classes, n, xlo, xhi);
    sw.run();
    return std::move(sw.diagram);
}

namespace {

std::vector<PolyClass> restricted_candidates(unsigned n, const Rational& xlo, const Rational& xhi,
                                             const EnvelopeOptions& opts) {
    std::map<std::vector<BigInt>, PolyClass> dedup;
    auto add_pattern = [&](const EntryPattern& p) {
        UniPoly q = det_polynomial(p);
        auto key = q.coeffs();
        auto it = dedup.find(key);
        if (it == dedup.end()) {
            dedup.emplace(key, PolyClass{q, p.code, 0});
        } else if (p.code < it->second.smallest_code) {
            it->second.smallest_code = p.code;
        }
    };
    Population pop = Population::binary(Rational(1));
    for (Family f : {Family::U, Family::Ur, Family::Uc, Family::Urc, Family::V, Family::W, Family::Wprime}) {
        if (n < family_min_dim(f)) continue;
        if (f == Family::Wprime && n % 2 != 0) continue;
        add_pattern(pattern_of(build_family(f, n, Rational(1), Rational(1)), pop));
    }
    for (unsigned g = 1; g <= opts.grid_points; ++g) {
        Rational x = xlo + (xhi - xlo) * Rational(static_cast<long>(g), static_cast<long>(opts.grid_points) + 1);
        MaxRecord rec = maximizers_at_ratio(n, x, true, opts.workers, opts.budget);
        for (const BigInt& code : rec.maximizers) {
            EntryPattern p;
            p.n = n;
            p.pop = pop;
            p.code = code;
            add_pattern(p);
        }
    }
    std::vector<PolyClass> classes;
    for (auto& [key, pc] : dedup) classes.push_back(std::move(pc));
    std::sort(classes.begin(), classes.end(),
              [](const PolyClass& a, const PolyClass& b) { return a.smallest_code < b.smallest_code; });
    return classes;
}

} // namespace

TransitionDiagram envelope(unsigned n, const Rational& xlo, const Rational& xhi, const EnvelopeOptions& opts) {
    if (xlo.sgn() <= 0) throw std::invalid_argument("envelope: the window must start at a positive ratio");
    std::vector<PolyClass> classes;
    bool restricted = opts.restrict_candidates;
    if (restricted) {
        classes = restricted_candidates(n, xlo, xhi, opts);
    } else {
        if (n > 6) {
            throw std::invalid_argument(
                "envelope: full candidate deduplication is supported for n <= 6; use the restricted mode");
        }
        classes = distinct_polynomials(n, opts.budget, opts.workers);
    }
    TransitionDiagram d = envelope_of(std::move(classes), n, xlo, xhi);
    d.candidate_restricted = restricted;
    return d;
}

SecondTransition second_transition(unsigned n, const EnvelopeOptions& opts) {
    if (n < 4 || n > 6) throw std::invalid_argument("second_transition: 4 <= n <= 6 required");
    Rational hi = case_iii_threshold(n);
    TransitionDiagram d = envelope(n, Rational(1), hi, opts);
    SecondTransition st;
    st.window_hi = hi;
    st.first_leader = d.classes[d.segments.front().cls].poly;
    if (!d.breakpoints.empty()) {
        st.found = true;
        st.exact = d.breakpoints.front().exact;
        st.lo = d.breakpoints.front().lo;
        st.hi = d.breakpoints.front().hi;
    } else {
        st.lo = st.hi = hi;
    }
    return st;
}

MaxRecord maximizers_at_ratio(unsigned n, const Rational& x, bool collect_all, unsigned workers,
                              unsigned long long budget) {
    SearchSpec spec;
    spec.n = n;
    spec.s = x;
    spec.pop = Population::binary(Rational(1));
    spec.collect_all = collect_all;
    spec.workers = workers;
    spec.budget = budget;
    return search_max(spec);
}

namespace {

std::string coeff_list(const UniPoly& p) {
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) s += " ";
        s += p.coeff(static_cast<unsigned>(i)).to_string();
    }
    if (p.is_zero()) s = "0";
    return s;
}

} // namespace

void write_diagram(std::ostream& os, const TransitionDiagram& d, bool machine) {
    if (machine) {
        os << "n " << d.n << "\n";
        os << "window " << d.window_lo.to_string() << " " << d.window_hi.to_string() << "\n";
        os << "candidates " << d.classes.size() << (d.candidate_restricted ? " restricted" : " full") << "\n";
        os << "segments " << d.segments.size() << "\n";
        for (std::size_t i = 0; i < d.segments.size(); ++i) {
            const PolyClass& pc = d.classes[d.segments[i].cls];
            os << "segment " << i << " sample " << d.segments[i].sample.to_string() << " code "
               << pc.smallest_code.to_string() << " patterns " << pc.pattern_count << " coeffs "
               << coeff_list(pc.poly) << "\n";
        }
        os << "breakpoints " << d.breakpoints.size() << "\n";
        for (std::size_t i = 0; i < d.breakpoints.size(); ++i) {
            const Breakpoint& b = d.breakpoints[i];
            os << "breakpoint " << i;
            if (b.exact) {
                os << " exact " << b.exact->to_string();
            } else {
                os << " enclosure " << b.lo.to_string() << " " << b.hi.to_string();
            }
            os << " witness " << coeff_list(b.witness) << "\n";
        }
        os << "touches " << d.touches.size() << "\n";
        for (const EnvelopeTouch& t : d.touches) {
            os << "touch code " << d.classes[t.cls].smallest_code.to_string() << " enclosure " << t.lo.to_string()
               << " " << t.hi.to_string() << "\n";
        }
        return;
    }

    os << "envelope for n=" << d.n << " on [" << d.window_lo.to_string() << ", " << d.window_hi.to_string()
       << "] over " << d.classes.size() << (d.candidate_restricted ? " restricted" : "") << " candidate polynomials\n";
    for (std::size_t i = 0; i < d.segments.size(); ++i) {
        const PolyClass& pc = d.classes[d.segments[i].cls];
        os << "  from ";
        if (i == 0) {
            os << d.window_lo.to_string();
        } else if (d.breakpoints[i - 1].exact) {
            os << d.breakpoints[i - 1].exact->to_string();
        } else {
            os << "(" << d.breakpoints[i - 1].lo.to_string() << ", " << d.breakpoints[i - 1].hi.to_string() << ")";
        }
        os << " to ";
        if (i < d.breakpoints.size()) {
            if (d.breakpoints[i].exact) {
                os << d.breakpoints[i].exact->to_string();
            } else {
                os << "(" << d.breakpoints[i].lo.to_string() << ", " << d.breakpoints[i].hi.to_string() << ")";
            }
        } else {
            os << d.window_hi.to_string();
        }
        os << ": |" << pc.poly.to_string() << "|  (code " << pc.smallest_code.to_string();
        if (!d.candidate_restricted) os << ", " << pc.pattern_count << " patterns";
        os << ", sample " << d.segments[i].sample.to_string() << ")\n";
    }
    for (const EnvelopeTouch& t : d.touches) {
        os << "  touch by code " << d.classes[t.cls].smallest_code.to_string() << " within ("
           << t.lo.to_string() << ", " << t.hi.to_string() << ")\n";
    }
}

} // namespace hessmax
