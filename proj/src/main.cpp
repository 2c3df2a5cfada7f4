#include <iostream>
#include <string>
#include <vector>

#include "solo/cli.h"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return solo::runCli(args, std::cout, std::cerr);
}
