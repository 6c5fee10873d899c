#include <iostream>

#include "capelli/cli_app.hpp"

int main(int argc, char** argv) {
  return capelli::run_cli(argc, argv, std::cout, std::cerr);
}
