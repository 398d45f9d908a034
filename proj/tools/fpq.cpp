#include <iostream>

#include "fpq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fpq::cli::run(args, std::cout, std::cerr);
}
