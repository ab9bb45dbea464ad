#include <iostream>

#include "theta_sums/cli.hpp"

int main(int argc, char** argv) {
  return theta_sums::cli::run(argc, argv, std::cout, std::cerr);
}
