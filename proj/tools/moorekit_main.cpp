#include <iostream>
#include <vector>

#include "moorekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return moorekit::run_cli(args, std::cout, std::cerr);
}
