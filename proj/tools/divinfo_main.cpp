#include <string>
#include <vector>

#include <iostream>

#include "divinfo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return divinfo::cli::run(args, std::cout, std::cerr);
}
