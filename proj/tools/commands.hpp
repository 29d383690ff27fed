#pragma once

#include "output.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace stair::cli {

// Runs one command line (without the program name). Reports go to `out` or the --output file, errors to
// `err` as JSON. Returns the exit code: 0 ok, 2 config error, 3 certification shortfall, 4 check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Command line that reproduces a report from its echoed config.
std::vector<std::string> args_from_config(const Json& config);

}  // namespace stair::cli
