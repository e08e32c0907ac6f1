#include <iostream>
#include <string>
#include <vector>

#include "horrocks/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return horrocks::run_cli(args, std::cout, std::cerr);
}
