// cli.hpp -- the `latinsq` command line, callable in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latinsq::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidSquare = 1,
    kUsage = 2,
    kBudgetExhausted = 3,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"generate", "--order", "5", "--seed", "7"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace latinsq::cli
