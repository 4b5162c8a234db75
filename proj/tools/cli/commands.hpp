#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyckdiv::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitUsage = 64;

// Runs the command line `args` (program name excluded), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyckdiv::cli
