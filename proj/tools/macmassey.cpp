#include <iostream>
#include <string>
#include <vector>

#include "mac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mac::cli::dispatch(args, std::cout, std::cerr);
}
