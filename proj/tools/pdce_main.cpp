#include <iostream>

#include "pdce/cli.hpp"

int main(int argc, char** argv) {
  return pdce::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
