#include <iostream>

#include "csr/cli.hpp"

int main(int argc, char** argv) {
  return csr::cli_main(argc, argv, std::cout, std::cerr);
}
