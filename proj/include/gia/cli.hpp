#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gia {

// Runs the gia command line on args (without the program name).
// Exit codes: 0 success, 1 domain error, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gia
