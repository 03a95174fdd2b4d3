#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clasp {

/// Exit codes: 0 success, 1 mathematical failure (not certified, claim
/// failed), 2 usage or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `clasp` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clasp
