#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cograph {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or a positive verdict, 1 a negative verdict, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cograph
