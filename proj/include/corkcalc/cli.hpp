#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corkcalc {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the CLI on `args` (program name excluded), writing results to `out`
// and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corkcalc
