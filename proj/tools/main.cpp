#include <iostream>

#include "liepair/cli.hpp"

int main(int argc, char** argv) {
  return liepair::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
