#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace svlie::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; args excludes the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svlie::cli
