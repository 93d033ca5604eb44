#include <iostream>
#include <string>
#include <vector>

#include "tknot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tknot::cli::run(args, std::cout, std::cerr);
}
