#include <iostream>
#include <string>
#include <vector>

#include "permuta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return permuta::run(args, std::cout, std::cerr);
}
