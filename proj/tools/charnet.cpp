#include <iostream>
#include <string>
#include <vector>

#include "charnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return charnet::cli::run(args, std::cout, std::cerr);
}
