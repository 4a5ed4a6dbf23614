#include <iostream>
#include <string>
#include <vector>

#include "wilker/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wilker::run(args, std::cout, std::cerr);
}
