#include "torsionlab/cli.hpp"

int main(int argc, char** argv) { return torsionlab::run_main(argc, argv); }
