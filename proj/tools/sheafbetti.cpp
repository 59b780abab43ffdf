#include <iostream>
#include <string>
#include <vector>

#include "sheafbetti/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = sheafbetti::run_command_line(args);
    std::cout << result.document;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
