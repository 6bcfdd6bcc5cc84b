#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    fstar::cli::Options options;
    const char* no_color = std::getenv("NO_COLOR");
    options.color = isatty(STDOUT_FILENO) != 0 && (no_color == nullptr || *no_color == '\0');
    std::vector<std::string> args(argv + 1, argv + argc);
    return fstar::cli::run(args, std::cout, std::cerr, options);
}
