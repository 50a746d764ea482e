#include <iostream>
#include <string>
#include <vector>

#include "leibcx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return leibcx::run(args, std::cout, std::cerr);
}
