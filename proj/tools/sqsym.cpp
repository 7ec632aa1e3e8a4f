#include <iostream>
#include <string>
#include <vector>

#include "sqsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sqsym::cli::run(args, std::cout, std::cerr);
}
