#include <iostream>

#include "gmpn/cli.hpp"

int main(int argc, char** argv) {
  return gmpn::run_cli(argc, argv, std::cout, std::cerr);
}
