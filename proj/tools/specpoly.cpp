#include <iostream>
#include <string>
#include <vector>

#include "specpoly/cli.hpp"

int main(int argc, char** argv) {
  return specpoly::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
