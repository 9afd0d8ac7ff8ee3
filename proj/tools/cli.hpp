#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ezeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name), writing results to out
/// and diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ezeta::cli
