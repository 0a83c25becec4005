#include <iostream>
#include <string>
#include <vector>

#include "respeak/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return respeak::run_cli(args, std::cout, std::cerr);
}
