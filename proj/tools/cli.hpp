#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fstar::cli {

enum ExitCode : int { kOk = 0, kRuntimeError = 1, kUsageError = 2 };

struct Options {
    // ANSI styling of the human-readable table.
    bool color = false;
};

// args excludes the program name. Data goes to out, messages to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options = {});

}  // namespace fstar::cli
