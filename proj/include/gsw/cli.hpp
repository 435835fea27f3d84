#pragma once

// Entry point of the `gsw` command-line tool.

#include <ostream>

namespace gsw {

// Exit status values returned by run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitNumerical = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsw
