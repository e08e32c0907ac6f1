#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace horrocks {

// Runs the command-line front end in-process.  Exit codes: 0 success,
// 1 verification failure, 2 invalid input, 3 inconclusive verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace horrocks
