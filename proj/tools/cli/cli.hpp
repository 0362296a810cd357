#pragma once

#include <iosfwd>

namespace mixedcol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
/// A closure produced a negative eddy coefficient on the requested state.
inline constexpr int kExitModelInvalid = 2;

/// Entry point of the `mixedcol` tool. Subcommands: run, coeffs,
/// equilibrium, diagnose, compare. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mixedcol::cli
