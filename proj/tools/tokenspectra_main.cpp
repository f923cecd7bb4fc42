#include <iostream>
#include <string>
#include <vector>

#include "tokens/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tokens::cli_dispatch(args, std::cout, std::cerr);
}
