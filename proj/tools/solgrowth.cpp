#include <iostream>

#include "solgrowth/cli.hpp"

int main(int argc, char** argv) {
  return solgrowth::cli::run(argc, argv, std::cout, std::cerr);
}
