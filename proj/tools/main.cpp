#include "cli.hpp"

int main(int argc, char** argv) { return nrad::cli::run(argc, argv); }
