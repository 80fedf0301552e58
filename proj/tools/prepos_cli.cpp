#include <iostream>

#include "prepos/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return static_cast<int>(prepos::run_command(args, std::cout, std::cerr));
}
