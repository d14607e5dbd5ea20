#pragma once

#include <iosfwd>

namespace puiseux {

/// Full CLI: parses argv, runs the command, prints one JSON document on out
/// and diagnostics on err. Returns the process exit code (0 success,
/// 1 usage/precondition error, 2 exhausted budget).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace puiseux
