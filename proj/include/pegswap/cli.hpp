#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pegswap::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerify = 2;

// Runs the command line `args` (args[0] is the program name) and returns the
// exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pegswap::cli
