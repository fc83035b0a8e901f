#include <iostream>

#include "arud/cli.hpp"

int main(int argc, char** argv) {
  return arud::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
