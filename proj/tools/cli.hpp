#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kMalformedInput = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kIoError = 4;

/// Runs the command line `args` (without the program name). "-" as an input
/// path reads `in`; "-" as an output path writes `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace planar::cli
