#pragma once

#include <ostream>

namespace sierp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMismatch = 4;

/// The sierp command line: gen, reduce, solve, construct, verify, repro, embed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sierp
