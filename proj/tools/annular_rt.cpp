#include <iostream>
#include <vector>

#include "annular/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return annular::run_cli(args, std::cout, std::cerr);
}
