#include <iostream>

#include "idg/cli.hpp"

int main(int argc, char** argv) {
  return idg::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
