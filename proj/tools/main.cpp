#include <iostream>

#include "fuzzy/cli.h"

int main(int argc, char** argv) {
  return fuzzy::execute(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
