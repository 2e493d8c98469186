#include "kac/cli.hpp"

int main(int argc, char** argv) { return kac::cli::run(argc, argv); }
