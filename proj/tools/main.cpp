#include <iostream>

#include "gainbalance/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gainbalance::run(args, std::cout, std::cerr);
}
