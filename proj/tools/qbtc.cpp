#include <iostream>
#include <string>
#include <vector>

#include "qbtc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qbtc::run(args, std::cout, std::cerr);
}
