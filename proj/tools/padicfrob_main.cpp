#include <iostream>

#include "padicfrob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return padicfrob::run_cli(args, std::cout, std::cerr);
}
