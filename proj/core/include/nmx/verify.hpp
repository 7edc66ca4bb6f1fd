#ifndef NMX_VERIFY_HPP
#define NMX_VERIFY_HPP

#include <string>
#include <vector>

namespace nmx {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // computed exact values, for auditing and freezing
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string to_json() const;
    std::string to_text() const;
};

// Committed exact-rational baselines, keyed by check name. A check whose
// baseline is missing fails and prints the computed value so it can be
// reviewed and frozen.
const char* baseline(const std::string& name);

SuiteReport verify_mac();
SuiteReport verify_ecc();
SuiteReport verify_design();
SuiteReport verify_ext();
SuiteReport verify_nmext();
SuiteReport verify_2nmext();
SuiteReport verify_t();
SuiteReport verify_pa(std::uint64_t correctness_trials = 10'000,
                      std::uint64_t robustness_trials = 100'000);
SuiteReport verify_entropy_loss();

SuiteReport run_suite(const std::string& name);
std::vector<std::string> suite_names();

} // namespace nmx

#endif
