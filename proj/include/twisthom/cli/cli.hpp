#pragma once

#include <iosfwd>

namespace twisthom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

/**
 * Entry point of the command-line tool. Subcommands: homology, acyclify,
 * search, verify, catalog. JSON results go to `out` (or --out FILE) and
 * diagnostics to `err`. Returns 0 on success, 1 on input or internal errors
 * and 2 for a well-formed negative result.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twisthom
