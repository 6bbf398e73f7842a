#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holgraph::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInfeasible = 3 };

// Runs one command line (args excludes the program name). Artifacts go to
// `out` unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holgraph::cli
