#include <iostream>
#include <string>
#include <vector>

#include "gel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto result = gel::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
