#include <iostream>
#include <string>
#include <vector>

#include "smoothsum_tools/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return smoothsum::tools::run(args, std::cout, std::cerr);
}
