#include <iostream>

#include "gto/cli.hpp"

int main(int argc, char** argv) {
  return gto::cli::run(argc, argv, std::cout, std::cerr);
}
