#include "frobsat/cli.hpp"

int main(int argc, char** argv) { return frobsat::cli_main(argc, argv); }
