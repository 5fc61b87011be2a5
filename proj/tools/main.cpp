#include <iostream>
#include <string>
#include <vector>

#include "p24/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return p24::cli::run(args, std::cout, std::cerr);
}
