#include <iostream>
#include <string>
#include <vector>

#include "arfkit/runner.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return arfkit::run(args, std::cout, std::cerr);
}
