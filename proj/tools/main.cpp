#include <iostream>
#include <string>
#include <vector>

#include "nhtopo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nhtopo::run(args, std::cout, std::cerr);
}
