#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricapolar {

/// Runs one command; args exclude the program name.
/// Returns 0 on success, 1 on a mathematical refusal, 2 on an input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricapolar
