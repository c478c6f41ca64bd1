#include <iostream>
#include <string>
#include <vector>

#include "kreg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kreg::run_cli(args, std::cout, std::cerr);
}
