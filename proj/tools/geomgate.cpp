#include "geomgate/cli.hpp"

int main(int argc, char** argv) { return geomgate::cli::main_entry(argc, argv); }
