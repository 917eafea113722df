#pragma once

#include <ostream>

namespace homotopelab {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2, exit_budget = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homotopelab
