#include <iostream>
#include <string>
#include <vector>

#include "t3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return t3::cli::run(std::move(args), std::cout, std::cerr);
}
