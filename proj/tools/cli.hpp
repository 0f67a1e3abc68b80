#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grouplabel::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kUnknown = 3 };

/// Runs one command line (without the program name). Output documents go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grouplabel::cli
