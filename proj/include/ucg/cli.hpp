#pragma once

#include <iosfwd>

namespace ucg::cli {

enum ExitCode : int { ok = 0, check_failed = 1, invalid_input = 2, guard_exceeded = 3 };

/// Runs one command line. Results go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace ucg::cli
