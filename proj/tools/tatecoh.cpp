#include <iostream>

#include "tate/cli.hpp"

int main(int argc, char** argv) {
  return tate::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
