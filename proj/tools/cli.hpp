#pragma once

// The jetcalc command line, callable in-process.
//
// Exit codes: 0 success, 1 a property or recombination check failed,
// 2 bad input or configuration.

#include <iosfwd>
#include <string>
#include <vector>

namespace jetcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

/// Runs the tool with the given arguments (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jetcalc::cli
