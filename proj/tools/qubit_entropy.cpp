#include "qubit_entropy/cli.hpp"

int main(int argc, char** argv) { return qe::run_cli(argc, argv); }
