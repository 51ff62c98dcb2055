#include <iostream>

#include "rspin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rspin::cli::run(args, std::cout, std::cerr);
}
