#include <iostream>
#include <string>
#include <vector>

#include "pahyper/cli.hpp"

int main(int argc, char** argv) {
  return pahyper::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
