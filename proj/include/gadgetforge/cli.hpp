#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gadgetforge::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBudget = 3;

/// Runs one command line (args exclude the program name). JSON goes to
/// `out`, human-readable messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gadgetforge::cli
