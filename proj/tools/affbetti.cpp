#include "affbetti/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return affbetti::cli::run_cli(args);
}
