#include <iostream>
#include <string>
#include <vector>

#include "scltwist/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return scltwist::cli::run(args, std::cout, std::cerr);
}
