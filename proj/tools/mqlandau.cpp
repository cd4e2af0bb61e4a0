#include <iostream>
#include <string>
#include <vector>

#include "mqlandau/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mqlandau::cli::run(args, std::cout, std::cerr);
}
