#include <iostream>
#include <string>
#include <vector>

#include "eqsum4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqsum4::run_cli(args, std::cin, std::cout, std::cerr);
}
