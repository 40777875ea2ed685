#include <iostream>

#include "mhg/cli.hpp"

int main(int argc, char** argv) {
  return mhg::cli::run(argc, argv, std::cout, std::cerr);
}
