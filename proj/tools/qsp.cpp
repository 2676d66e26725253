#include <iostream>

#include "qsp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsp::run_cli(args, std::cout, std::cerr);
}
