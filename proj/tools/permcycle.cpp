#include <iostream>
#include <string>
#include <vector>

#include "permcycle/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return permcycle::cli::run(args, std::cout, std::cerr);
}
