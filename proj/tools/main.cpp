#include <iostream>

#include "deltaft/cli.hpp"

int main(int argc, char** argv) {
  const deltaft::CommandResult r = deltaft::run_cli(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
