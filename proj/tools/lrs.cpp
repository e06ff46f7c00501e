#include <cstdlib>
#include <iostream>

#include "lrs/cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("LRS_SEED")) env_seed = s;
  return lrs::cli::main_entry({argv + 1, argv + argc}, env_seed, std::cout, std::cerr);
}
