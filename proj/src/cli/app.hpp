#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gontet::cli {

// Runs one command line (without the program name). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gontet::cli
