#include <iostream>

#include "hyperreg/cli.hpp"

int main(int argc, char** argv) {
  return hyperreg::run_cli(argc, argv, std::cout, std::cerr);
}
