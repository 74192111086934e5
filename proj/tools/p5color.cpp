#include "p5col/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return p5col::run_cli(args, std::cout, std::cerr);
}
