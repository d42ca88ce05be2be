#include <iostream>

#include "permgen/cli.hpp"

int main(int argc, char** argv) {
  return permgen::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
