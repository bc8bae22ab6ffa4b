#include <iostream>
#include <string>
#include <vector>

#include "ppart/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ppart::dispatch(args, std::cout, std::cerr);
}
