#include "cli.hpp"

int main(int argc, char** argv) { return gensmooth::cli::main_entry(argc, argv); }
