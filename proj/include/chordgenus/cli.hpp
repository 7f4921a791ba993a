#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordgenus {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBoundFailure = 3;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// --out when given, otherwise to `out`; the bound table goes to `out` when
/// --out is given, otherwise to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordgenus
