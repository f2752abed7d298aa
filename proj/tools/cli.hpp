#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankdep::cli {

// Exit codes: 0 success, 1 computational failure (or a failed oracle
// check), 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line `args` (args[0] is the program name). Results go
// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankdep::cli
