#include <iostream>
#include <string>
#include <vector>

#include "tcurv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcurv::cli::run(args, std::cout, std::cerr);
}
