#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mooring::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kSolveFailed = 3;
inline constexpr int kIoError = 4;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mooring::cli
