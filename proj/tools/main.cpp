#include <iostream>

#include "gadgetforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gadgetforge::cli::run(args, std::cout, std::cerr);
}
