#pragma once

#include <iosfwd>

namespace flexdist::cli {

enum ExitCode : int { kSuccess = 0, kInternalError = 1, kInputError = 2 };

/// Runs the command line front end. The report goes to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flexdist::cli
