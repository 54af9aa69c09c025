#pragma once

#include <iosfwd>

namespace crs::cli {

/// Exit codes: 0 all hold, 1 at least one violation, 2 usage or config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line. The report goes to --out or, without it, to `out`;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crs::cli
