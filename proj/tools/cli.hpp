#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palwidth::cli {

/// Exit codes: 0 success, 1 a verification found a violation, 2 usage,
/// parse or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace palwidth::cli
