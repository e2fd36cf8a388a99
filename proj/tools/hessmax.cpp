// hessmax: exact maximum-determinant toolkit for upper Hessenberg matrices
// with a fixed subdiagonal and upper entries from a finite population.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error, 3 budget
// exceeded.

#include "hessmax/families.hpp"
#include "hessmax/matrix.hpp"
#include "hessmax/oracles.hpp"
#include "hessmax/scalar.hpp"
#include "hessmax/search.hpp"
#include "hessmax/transitions.hpp"
#include "hessmax/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hessmax;

int cmd_det(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    HessMatrix m = read_matrix(in);
    std::vector<Rational> h = trailing_minors(m);
    std::cout << "det = " << h.front().to_string() << "\n";
    std::cout << "trailing minors:";
    for (const Rational& v : h) std::cout << " " << v.to_string();
    std::cout << "\n";
    return 0;
}

int cmd_construct(const std::string& family, unsigned n, const std::string& s_str, const std::string& t_str,
                  const std::string& out_path) {
    auto fam = family_from_name(family);
    if (!fam) {
        std::cerr << "unknown family \"" << family << "\" (use U, Ur, Uc, Urc, V, W or Wprime)\n";
        return 2;
    }
    Rational s = parse_rational(s_str), t = parse_rational(t_str);
    HessMatrix m = build_family(*fam, n, s, t);
    if (out_path.empty()) {
        write_matrix(std::cout, m);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        write_matrix(out, m);
    }
    Rational exact = determinant(m);
    Rational closed = family_det(*fam, n, s, t);
    std::cout << "family " << family_name(*fam) << " n=" << n << " s=" << s.to_string() << " t=" << t.to_string()
              << "\n";
    std::cout << "det = " << exact.to_string() << "\n";
    std::cout << "closed-form det = " << closed.to_string() << "\n";
    std::cout << "abs(det) = " << exact.abs().to_string() << "\n";
    if (exact != closed) {
        std::cerr << "closed form disagrees with the exact determinant\n";
        return 1;
    }
    return 0;
}

int cmd_oracle(unsigned n, const std::string& s_str, const std::string& t_str, bool sequence,
               const std::string& certified_str, bool machine) {
    Rational s = parse_rational(s_str), t = parse_rational(t_str);
    std::optional<Rational> certified;
    if (!certified_str.empty()) certified = parse_rational(certified_str);
    std::vector<RegimeTag> tags = classify_regime(n, s, t, certified);

    std::ostream& os = std::cout;
    if (machine) {
        os << "n " << n << "\ns " << s.to_string() << "\nt " << t.to_string() << "\nregime";
        for (RegimeTag r : tags) os << " " << regime_name(r);
        os << "\n";
    } else {
        os << "n=" << n << " s=" << s.to_string() << " t=" << t.to_string() << "\nregime:";
        for (RegimeTag r : tags) os << " " << regime_name(r);
        os << "\n";
    }
    auto emit_value = [&](const std::string& label, const Rational& v) {
        if (machine) {
            os << "max " << label << " " << v.to_string() << "\n";
        } else {
            os << "max |det| (" << label << ") = " << v.to_string() << "\n";
        }
    };
    for (RegimeTag r : tags) {
        switch (r) {
            case RegimeTag::NegativeS: emit_value(regime_name(r), max_negative_s(n, s, t)); break;
            case RegimeTag::CaseI: emit_value(regime_name(r), max_case_i(n, s, t)); break;
            case RegimeTag::CaseII:
                if (n >= 4) emit_value(regime_name(r), max_case_ii(n, s, t));
                break;
            case RegimeTag::CaseIII: emit_value(regime_name(r), max_case_iii(n, s, t)); break;
            case RegimeTag::Open:
                os << (machine ? "max open unknown\n"
                               : "no closed form is known in the open regime; use search or sweep\n");
                break;
        }
    }
    if (sequence) {
        for (RegimeTag r : tags) {
            if (r == RegimeTag::CaseI) {
                os << "sequence";
                for (const Rational& v : max_case_i_sequence(n, s, t)) os << " " << v.to_string();
                os << "\n";
            } else if (r == RegimeTag::CaseII && n >= 4) {
                os << "sequence";
                for (const Rational& v : max_case_ii_sequence(n, s, t)) os << " " << v.to_string();
                os << "\n";
            }
        }
    }
    return 0;
}

int cmd_ineq(unsigned n, const std::string& x_str, bool machine) {
    Rational x = parse_rational(x_str);
    RatioInequalities r = regime_inequalities(n, x);
    if (machine) {
        std::cout << "n " << n << "\nx " << x.to_string() << "\nok";
        for (bool b : r.ok) std::cout << " " << (b ? 1 : 0);
        std::cout << "\n";
    } else {
        std::cout << "tail-dominance inequalities at n=" << n << ", x=" << x.to_string() << "\n";
        for (std::size_t i = 0; i < r.ok.size(); ++i) {
            std::cout << "  [" << (r.ok[i] ? "true " : "false") << "] " << RatioInequalities::labels[i] << "\n";
        }
    }
    return 0;
}

int cmd_search(unsigned n, const std::string& s_str, const std::string& t_str, int d, bool all,
               unsigned workers, unsigned long long budget, bool use_template, unsigned long long audit_stride,
               bool machine) {
    SearchSpec spec;
    spec.n = n;
    spec.s = parse_rational(s_str);
    if (d >= 0) {
        if (!t_str.empty()) {
            std::cerr << "--t and --d are mutually exclusive\n";
            return 2;
        }
        if (d < 1) {
            std::cerr << "--d must be at least 1\n";
            return 2;
        }
        spec.pop = Population::range(static_cast<unsigned>(d));
    } else {
        spec.pop = Population::binary(t_str.empty() ? Rational(1) : parse_rational(t_str));
    }
    spec.collect_all = all;
    spec.workers = workers;
    spec.budget = budget;
    spec.audit_stride = audit_stride;
    if (use_template) spec.tmpl = build_template(n);
    MaxRecord rec = search_max(spec);
    write_record(std::cout, spec, rec, machine);
    return 0;
}

int cmd_poly(unsigned n, const std::string& code_str, const std::string& t_str, const std::string& s_str,
             bool machine) {
    EntryPattern p;
    p.n = n;
    p.pop = Population::binary(t_str.empty() ? Rational(1) : parse_rational(t_str));
    p.code = BigInt(code_str);
    if (p.code.sgn() < 0 || p.code >= EntryPattern::space_size(n, p.pop)) {
        std::cerr << "code out of range for n=" << n << "\n";
        return 2;
    }
    CoeffVector cv = path_coefficients(p);
    UniPoly q = det_polynomial(cv);
    if (machine) {
        std::cout << "n " << n << "\ncode " << p.code.to_string() << "\ncoefficients";
        for (std::uint64_t v : cv.c) std::cout << " " << v;
        std::cout << "\npoly";
        for (int i = 0; i <= q.degree(); ++i) std::cout << " " << q.coeff(static_cast<unsigned>(i)).to_string();
        if (q.is_zero()) std::cout << " 0";
        std::cout << "\n";
    } else {
        std::cout << "pattern code " << p.code.to_string() << " at n=" << n << ", population "
                  << p.pop.describe() << "\n";
        std::cout << "graded coefficients c_1..c_n:";
        for (std::uint64_t v : cv.c) std::cout << " " << v;
        std::cout << "\n";
        std::cout << "det / t^n as a polynomial in x = s/t: " << q.to_string() << "\n";
    }
    if (!s_str.empty()) {
        Rational s = parse_rational(s_str);
        Rational det = determinant(realize(p, s));
        std::cout << (machine ? "det " : "det at s = ") << (machine ? "" : s_str + ": ") << det.to_string() << "\n";
    }
    return 0;
}

int cmd_sweep(unsigned n, const std::string& lo_str, const std::string& hi_str, const std::string& width_str,
              bool restricted, unsigned grid, unsigned workers, unsigned long long budget, bool machine) {
    EnvelopeOptions opts;
    opts.budget = budget;
    opts.workers = workers;
    opts.restrict_candidates = restricted;
    if (grid) opts.grid_points = grid;
    TransitionDiagram d = envelope(n, parse_rational(lo_str), parse_rational(hi_str), opts);
    if (!width_str.empty()) {
        Rational w = parse_rational(width_str);
        for (Breakpoint& b : d.breakpoints) {
            if (b.exact) continue;
            IsolatingInterval iv{b.lo, b.hi, b.witness};
            iv = refine_interval(std::move(iv), w);
            b.lo = iv.lo;
            b.hi = iv.hi;
        }
    }
    write_diagram(std::cout, d, machine);
    return 0;
}

int cmd_verify(const std::string& suite, unsigned n_max, std::uint64_t seed, unsigned workers, bool machine) {
    RunReport rep = run_suite(suite, n_max, seed, workers);
    write_report(std::cout, rep, machine);
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximum-determinant toolkit for upper Hessenberg matrices over finite entry populations"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned workers = 0;
    unsigned long long budget = 0;
    app.add_option("--workers", workers, "worker threads (default: HESSMAX_WORKERS or hardware)")->capture_default_str();
    app.add_option("--budget", budget, "evaluation budget (default: HESSMAX_BUDGET or 2^30)");

    // det
    std::string det_file;
    CLI::App* det = app.add_subcommand("det", "determinant and trailing minors of a matrix file");
    det->add_option("file", det_file, "matrix text file")->required();

    // construct
    std::string con_family, con_s, con_t, con_out;
    unsigned con_n = 0;
    CLI::App* con = app.add_subcommand("construct", "build a named family member and report its determinant");
    con->add_option("family", con_family, "U, Ur, Uc, Urc, V, W or Wprime")->required();
    con->add_option("n", con_n, "dimension")->required();
    con->add_option("s", con_s, "subdiagonal value (integer or p/q)")->required();
    con->add_option("t", con_t, "entry value (integer or p/q)")->required();
    con->add_option("-o,--output", con_out, "write the matrix file here instead of stdout");

    // oracle
    unsigned ora_n = 0;
    std::string ora_s, ora_t = "1", ora_cert;
    bool ora_seq = false, ora_machine = false;
    bool ora_ineq = false;
    std::string ora_x;
    CLI::App* ora = app.add_subcommand("oracle", "closed-form maxima and regime classification");
    ora->add_option("--n", ora_n, "dimension")->required();
    ora->add_option("--s", ora_s, "subdiagonal value");
    ora->add_option("--t", ora_t, "entry scale (default 1)");
    ora->add_option("--certified-ratio", ora_cert, "treat ratios up to this value as the post-unity regime");
    ora->add_flag("--sequence", ora_seq, "print the full sequence up to n");
    ora->add_flag("--ineq", ora_ineq, "evaluate the tail-dominance inequalities instead");
    ora->add_option("--x", ora_x, "ratio for --ineq");
    ora->add_flag("--machine", ora_machine, "machine-readable output");

    // search
    unsigned sea_n = 0;
    std::string sea_s, sea_t;
    int sea_d = -1;
    bool sea_all = false, sea_machine = false, sea_tmpl = false;
    unsigned long long sea_audit = 0;
    CLI::App* sea = app.add_subcommand("search", "exhaustive exact maximizer search");
    sea->add_option("--n", sea_n, "dimension")->required();
    sea->add_option("--s", sea_s, "subdiagonal value (integer or p/q)")->required();
    sea->add_option("--t", sea_t, "entry value for the {0,t} population (default 1)");
    sea->add_option("--d", sea_d, "search entries {0..d} instead of {0,t}");
    sea->add_flag("--all", sea_all, "collect every maximizing pattern code");
    sea->add_flag("--template", sea_tmpl, "restrict to the large-ratio template (n >= 5)");
    sea->add_option("--audit-stride", sea_audit, "cross-check every k-th leaf against the direct determinant");
    sea->add_flag("--machine", sea_machine, "machine-readable output");

    // poly
    unsigned pol_n = 0;
    std::string pol_code, pol_t, pol_s;
    bool pol_machine = false;
    CLI::App* pol = app.add_subcommand("poly", "graded coefficients and determinant polynomial of a pattern code");
    pol->add_option("--n", pol_n, "dimension")->required();
    pol->add_option("--code", pol_code, "pattern code (decimal)")->required();
    pol->add_option("--t", pol_t, "entry value of the {0,t} population (default 1)");
    pol->add_option("--s", pol_s, "also evaluate the determinant at this subdiagonal value");
    pol->add_flag("--machine", pol_machine, "machine-readable output");

    // sweep
    unsigned swe_n = 0, swe_grid = 0;
    std::string swe_lo, swe_hi, swe_width;
    bool swe_restricted = false, swe_machine = false;
    CLI::App* swe = app.add_subcommand("sweep", "maximizer-versus-ratio envelope over a ratio window");
    swe->add_option("--n", swe_n, "dimension")->required();
    swe->add_option("--x-lo", swe_lo, "window start (ratio s/t, > 0)")->required();
    swe->add_option("--x-hi", swe_hi, "window end")->required();
    swe->add_option("--refine-width", swe_width, "refine breakpoint enclosures to at most this width");
    swe->add_flag("--restricted", swe_restricted, "use grid winners + named families as candidates");
    swe->add_option("--grid", swe_grid, "grid points for --restricted (default 8)");
    swe->add_flag("--machine", swe_machine, "machine-readable output");

    // verify
    std::string ver_suite = "all";
    unsigned ver_nmax = 5;
    std::uint64_t ver_seed = 20240817;
    bool ver_machine = false;
    CLI::App* ver = app.add_subcommand("verify", "run a named verification suite");
    std::string suites;
    for (const std::string& s : hessmax::suite_names()) suites += (suites.empty() ? "" : ", ") + s;
    ver->add_option("--suite", ver_suite, "one of: " + suites + ", all (default all)");
    ver->add_option("--n-max", ver_nmax, "dimension ceiling (default 5)")->capture_default_str();
    ver->add_option("--seed", ver_seed, "randomized-check seed")->capture_default_str();
    ver->add_flag("--machine", ver_machine, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (det->parsed()) return cmd_det(det_file);
        if (con->parsed()) return cmd_construct(con_family, con_n, con_s, con_t, con_out);
        if (ora->parsed()) {
            if (ora_ineq) {
                if (ora_x.empty()) {
                    std::cerr << "--ineq requires --x\n";
                    return 2;
                }
                return cmd_ineq(ora_n, ora_x, ora_machine);
            }
            if (ora_s.empty()) {
                std::cerr << "--s is required\n";
                return 2;
            }
            return cmd_oracle(ora_n, ora_s, ora_t, ora_seq, ora_cert, ora_machine);
        }
        if (sea->parsed()) {
            return cmd_search(sea_n, sea_s, sea_t, sea_d, sea_all, workers, budget, sea_tmpl, sea_audit,
                              sea_machine);
        }
        if (pol->parsed()) return cmd_poly(pol_n, pol_code, pol_t, pol_s, pol_machine);
        if (swe->parsed()) {
            return cmd_sweep(swe_n, swe_lo, swe_hi, swe_width, swe_restricted, swe_grid, workers, budget,
                             swe_machine);
        }
        if (ver->parsed()) return cmd_verify(ver_suite, ver_nmax, ver_seed, workers, ver_machine);
    } catch (const hessmax::BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const hessmax::MatrixParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
