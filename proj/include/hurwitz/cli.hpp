#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz {

// Exit statuses of run_cli.
enum ExitStatus { exit_ok = 0, exit_verify_failed = 1, exit_domain = 2, exit_resource = 3 };

// Runs one command line (arguments without the program name). The result
// document goes to out only once the whole computation succeeded; diagnostics
// go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz
