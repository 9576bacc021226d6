#pragma once

#include <iosfwd>

namespace ecodyck::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_operational = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_violation = 3;

/// Runs the command line `argv[0] <subcommand> ...`, writing table output to
/// `out` (unless --out is given) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ecodyck::cli
