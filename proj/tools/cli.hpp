#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mimicnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and help to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mimicnet::cli
