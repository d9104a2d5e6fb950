#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qweyl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedChecks = 1;
inline constexpr int kExitNotInner = 2;
inline constexpr int kExitInconsistentSpec = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs the command line (args excludes the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qweyl::cli
