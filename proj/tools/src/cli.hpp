#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cosetcover::cli {

/// Exit codes of the cosetcover binary.
inline constexpr int exit_ok = 0;
inline constexpr int exit_assert_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_counterexample = 3;

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosetcover::cli
