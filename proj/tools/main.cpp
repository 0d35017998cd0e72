#include <iostream>
#include <string>
#include <vector>

#include "lefschetz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lefschetz::run(args, std::cout, std::cerr);
}
