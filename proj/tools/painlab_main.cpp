#include <iostream>
#include <string>
#include <vector>

#include "painlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return painlab::cli::run(args, std::cout, std::cerr);
}
