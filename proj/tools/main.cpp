// Process entry point; all logic lives in the library's cli_main.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "dipdec/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return dipdec::cli_main(args, std::cout, std::cerr);
}
