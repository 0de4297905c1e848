#include <iostream>
#include <string>
#include <vector>

#include "ffree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ffree::run_cli(args, std::cout, std::cerr);
}
