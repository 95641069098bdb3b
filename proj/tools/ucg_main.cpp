#include "ucg/cli.hpp"

int main(int argc, char** argv) { return ucg::cli::run(argc, argv); }
