#include <iostream>
#include <string>
#include <vector>

#include "heights/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return heights::cli::run(args, std::cout, std::cerr);
}
