#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latpoly {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kNegative = 1, kParseError = 2, kDomainError = 3 };

/// Runs the command line `args` (without the program name); file arguments
/// name input files, "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// The atlas document for --size 5 or 4.
std::string atlas_json(int size, unsigned threads);

}  // namespace latpoly
