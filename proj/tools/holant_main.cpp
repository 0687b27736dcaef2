#include <iostream>

#include "holant/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return holant::cli::run(args, std::cout, std::cerr);
}
