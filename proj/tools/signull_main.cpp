#include <iostream>

#include "signull/cli.hpp"

int main(int argc, char** argv) {
  return signull::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
