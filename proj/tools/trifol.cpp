#include <iostream>
#include <string>
#include <vector>

#include "trifol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trifol::run_cli(std::move(args), std::cout, std::cerr);
}
