#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aggtree::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFailed = 2;

/// Runs one command line (args excludes the program name) and returns the
/// process exit code: 0 success, 1 usage error, 2 infeasible or failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aggtree::cli
