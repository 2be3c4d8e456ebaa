#include <iostream>
#include <string>
#include <vector>

#include "sproga/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sproga::cli::run(args, std::cout, std::cerr);
}
