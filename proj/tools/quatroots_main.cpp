#include <iostream>

#include "quatroots/cli.hpp"

int main(int argc, char** argv) {
    return quatroots::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
