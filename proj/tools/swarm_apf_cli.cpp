#include <iostream>
#include <string>
#include <vector>

#include "swarm_apf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return swarm_apf::run_cli(args, std::cout, std::cerr);
}
