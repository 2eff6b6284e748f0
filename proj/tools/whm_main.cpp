#include <iostream>
#include <string>
#include <vector>

#include "whm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return whm::cli::run(args, std::cout, std::cerr);
}
