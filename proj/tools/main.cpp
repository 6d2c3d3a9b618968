#include <iostream>
#include <string>
#include <vector>

#include "detpart/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return detpart::cli::run(args, std::cout, std::cerr);
}
