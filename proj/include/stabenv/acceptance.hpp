#ifndef STABENV_ACCEPTANCE_HPP
#define STABENV_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace stabenv {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ran = false;      // false when the tier's --max-n excludes it
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    /// Sweep bound: 2 = fast tier, 4 = full, 5 = extended.
    int max_n = 4;
    std::uint64_t seed = 20250809;
    int threads = 0;  // 0 = hardware concurrency
};

/// Runs the whole verification suite, printing one pass/fail line per
/// criterion to `out` as results arrive.  Returns all results.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt, std::ostream& out);

/// True when every executed criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace stabenv

#endif
