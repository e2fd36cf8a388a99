// Named verification suites: each check compares an exhaustive search, a
// closed form, or a combinatorial bound against an independent route and
// reports pass/fail.  Shared by the CLI verify command and the test suites.

#ifndef HESSMAX_VERIFY_HPP
#define HESSMAX_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hessmax {

struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string suite;
    unsigned n_max = 0;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const Check& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

std::vector<std::string> suite_names();

// suite is one of suite_names() or "all".  Throws std::invalid_argument for
// unknown names.  workers = 0 picks the default.
RunReport run_suite(const std::string& suite, unsigned n_max, std::uint64_t seed, unsigned workers);

void write_report(std::ostream& os, const RunReport& r, bool machine);

} // namespace hessmax

#endif
