#include "edgepoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return edgepoly::run_cli(args, std::cin, std::cout, std::cerr);
}
