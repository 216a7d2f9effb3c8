#include <iostream>
#include <string>
#include <vector>

#include "klein/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return klein::run(args, std::cout, std::cerr);
}
