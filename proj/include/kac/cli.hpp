/*
  cli.hpp — command-line front end. One subcommand per pipeline, text or
  JSON output, exit code 0 on success, 1 when an oracle subcommand finds a
  mismatch, 2 on invalid input or usage errors.
*/
#pragma once

#include <string>
#include <vector>

namespace kac::cli {

// args in natural order, without the program name
int run(std::vector<std::string> args);

int run(int argc, const char* const* argv);

}  // namespace kac::cli
