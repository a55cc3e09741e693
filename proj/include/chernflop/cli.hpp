#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chernflop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Default q-precision; CHERNFLOP_QPREC overrides it when set to a positive integer.
int default_q_prec();

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chernflop
