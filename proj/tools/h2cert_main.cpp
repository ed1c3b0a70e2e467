#include <iostream>

#include "h2cert/cli.hpp"

int main(int argc, char** argv) {
  const auto outcome = h2cert::run_cli(std::vector<std::string>(argv + 1, argv + argc));
  std::cerr << outcome.err;
  std::cout << outcome.out << std::flush;
  return outcome.exit_code;
}
