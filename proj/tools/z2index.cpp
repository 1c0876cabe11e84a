#include <iostream>

#include "z2index/cli.hpp"

int main(int argc, char** argv) {
  return z2index::cli::run(argc, argv, std::cout, std::cerr);
}
