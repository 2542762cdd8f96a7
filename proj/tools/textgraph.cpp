#include <iostream>
#include <string>
#include <vector>

#include "textgraph/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return textgraph::cli::run(args, std::cout, std::cerr);
}
