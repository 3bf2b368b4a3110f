#include <iostream>

#include "sbraid/cli.hpp"

int main(int argc, char** argv) {
  return sbraid::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
