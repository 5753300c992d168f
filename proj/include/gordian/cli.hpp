#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace gordian {

// Entry point for the command-line tool.  `args` excludes the program name.
// Exit status: 0 success, 1 verification failure, 2 usage/input error.
int cli_main(std::vector<std::string> args, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);
int cli_main(int argc, char** argv);

}  // namespace gordian
