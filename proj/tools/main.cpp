/**
 * @file main.cpp
 */
#include <iostream>
#include <string>
#include <vector>

#include "cli.h"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return melscore::runCli(args, std::cout, std::cerr);
}
