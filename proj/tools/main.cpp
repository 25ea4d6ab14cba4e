#include <iostream>

#include "cyclefactor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cyclefactor::dispatch(args, std::cout, std::cerr);
}
