#include <iostream>

#include "holord/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return holord::cli::run(args, std::cout, std::cerr);
}
