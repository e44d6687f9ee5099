#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a mathematical check did not hold
inline constexpr int kExitInput = 2;   // unreadable, malformed or invalid input

/// Runs one command line (without the program name). A file argument of
/// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace latspec::cli
