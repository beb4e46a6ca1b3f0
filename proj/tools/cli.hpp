#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace herglotz::cli {

/// Exit codes of the command-line front end.
enum Exit : int { Success = 0, Rejected = 1, Undecided = 2, Malformed = 3, HypothesisViolated = 4 };

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; nothing is written to `out` on exit codes 3 and 4.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace herglotz::cli
