#include <iostream>
#include <string>
#include <vector>

#include "gyro/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gyro::run_cli(args, std::cout, std::cerr);
}
