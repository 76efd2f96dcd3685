#include "nkoszul/cli.hpp"

int main(int argc, char** argv) { return nkoszul::cli_main(argc, argv); }
