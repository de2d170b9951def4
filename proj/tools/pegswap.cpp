#include <iostream>
#include <string>
#include <vector>

#include "pegswap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pegswap::cli::run(args, std::cout, std::cerr);
}
