#include "circ/cli.hpp"

int main(int argc, char** argv) { return circ::run_cli(argc, argv); }
