#include <iostream>

#include "ccfusion/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ccfusion::run_cli(args, std::cout, std::cerr);
}
