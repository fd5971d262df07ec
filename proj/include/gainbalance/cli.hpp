#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gainbalance {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;

/// Runs one subcommand; `args` excludes the program name. Verdicts go to the
/// report, not the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gainbalance
