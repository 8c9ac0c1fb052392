#ifndef CRBR_CLI_HPP
#define CRBR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace crbr {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;            // also: entailment holds
inline constexpr int kExitFalse = 1;         // entailment does not hold
inline constexpr int kExitParseError = 2;    // bad formula/base text or usage
inline constexpr int kExitInconsistent = 3;  // mu unsatisfiable
inline constexpr int kExitCapExceeded = 4;   // variable/base cap hit
inline constexpr int kExitBadFamily = 5;     // invalid or unusable family

// Runs the command line given as argv (without the program name) and writes
// to the supplied streams. Never throws; every failure is an exit code plus
// one diagnostic line on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace crbr

#endif  // CRBR_CLI_HPP
