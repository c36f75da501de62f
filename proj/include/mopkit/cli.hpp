#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mopkit {

// Runs a CLI invocation; JSON on out, machine-readable errors on err.
// Exit codes: 0 pass, 1 verification failure, 2 usage/admissibility error.
int run_cli_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace mopkit
