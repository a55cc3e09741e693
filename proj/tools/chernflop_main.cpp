#include <iostream>
#include <string>
#include <vector>

#include "chernflop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chernflop::run(args, std::cout, std::cerr);
}
