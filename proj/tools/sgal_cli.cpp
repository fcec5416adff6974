#include <iostream>
#include <string>
#include <vector>

#include "sgal/cli.hpp"

int main(int argc, char** argv) {
  return sgal::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout,
                        std::cerr);
}
