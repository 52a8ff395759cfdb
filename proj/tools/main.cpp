#include <iostream>

#include "qboole/cli.hpp"

int main(int argc, char** argv) {
  return qboole::cli::main_entry(argc, argv, std::cout, std::cerr);
}
