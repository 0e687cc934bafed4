#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlie {

/// Runs one subcommand (args exclude the program name).
/// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlie
