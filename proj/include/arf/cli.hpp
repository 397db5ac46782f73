#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arf::cli {

/// Exit codes: 0 success, 1 domain-negative outcome, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arf::cli
