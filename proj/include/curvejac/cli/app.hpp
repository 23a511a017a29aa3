#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvejac::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // well-formed question, negative answer
inline constexpr int kUsage = 2;     // bad flags, unreadable or malformed input

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvejac::cli
