#ifndef OWLREG_CLI_HPP_
#define OWLREG_CLI_HPP_

#include <ostream>

namespace owlreg::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseFailure = 2,
    kTimedOut = 3,  // report written, but posets missing
};

// Environment variable overriding the default per-ontology budget (seconds).
inline constexpr const char* kBudgetEnv = "OWLREG_BUDGET";

// Entry point of the `owlreg` tool; commands: analyze, survey, top, poset,
// classify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace owlreg::cli

#endif  // OWLREG_CLI_HPP_
