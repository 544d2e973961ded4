#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delpezzo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kOutOfScope = 3;

/// Runs `acm` with args (excluding the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo::cli
