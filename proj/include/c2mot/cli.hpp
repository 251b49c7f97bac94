#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c2mot {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailures = 3;

/// Runs the command line `args` (without the program name), writing to out/err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c2mot
