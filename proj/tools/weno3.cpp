#include <iostream>

#include "weno3/cli.hpp"

int main(int argc, char** argv) {
  return weno3::cli::main_entry(argc, argv, std::cout, std::cerr);
}
