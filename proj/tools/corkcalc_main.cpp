#include <iostream>
#include <string>
#include <vector>

#include "corkcalc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return corkcalc::run_cli(args, std::cout, std::cerr);
}
