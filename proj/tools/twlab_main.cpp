#include "twlab/cli.hpp"

int main(int argc, char** argv) { return tw::run_cli(argc, argv); }
