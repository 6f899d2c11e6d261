#include "eqhom/cli.hpp"

int main(int argc, char** argv) { return eqhom::cli::run_cli(argc, argv); }
