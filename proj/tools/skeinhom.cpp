#include <iostream>

#include "skeinhom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skeinhom::cli::run(args, std::cin, std::cout, std::cerr);
}
