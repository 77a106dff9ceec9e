#pragma once

#include <ostream>
#include <span>
#include <string>

namespace scltwist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitRefused = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// usage and parse errors to `err`. Returns 0 when every report is ok, 1 on
/// a verification failure, 2 on refused or invalid input.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace scltwist::cli
