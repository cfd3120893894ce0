#pragma once

#include <iosfwd>

namespace systema {

/// Exit codes of the command-line front end.
enum ExitCode : int { kComputed = 0, kViolated = 1, kUsage = 2 };

/// Runs the systema command line. Reports go to `out`, diagnostics to `err`.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace systema
