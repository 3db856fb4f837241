#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recip::cli {

/// Exit status of a CLI invocation. Verdicts (including NotMember) are
/// results, not errors.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,  // bad flags, unknown subcommand, or input outside an operation's domain
  kParse = 3,  // malformed expression, rational or JSON input
};

/// Runs one command line (args excludes the program name) and writes the
/// result to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recip::cli
