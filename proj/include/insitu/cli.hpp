#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace insitu {

// Exit codes of the `insitu` command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;  // only with --strict
inline constexpr int kExitUsage = 2;         // bad arguments, unreadable or malformed input

/// Environment variable holding a default factorization tolerance. --tol wins.
inline constexpr const char* kTolEnvVar = "INSITU_TOL";

// Runs the command line `args` (args[0] is the program name). Standard input
// for `stream` comes from `in`; results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace insitu
