#pragma once

#include <exception>

namespace curskel::cli {

// Exit codes: 0 success, 2 usage/config, 3 parse, 4 numeric, 5 budget.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitNumeric = 4;
inline constexpr int kExitBudget = 5;

/// Maps a thrown failure to its exit code.
int exit_code_for(const std::exception& e);

/// Full CLI entry point: parses argv, runs the subcommand, prints the JSON
/// report to stdout and a short summary to stderr.
int run_cli(int argc, const char* const* argv);

}  // namespace curskel::cli
