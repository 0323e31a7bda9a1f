#include "uncsimp/cli.hpp"

int main(int argc, char** argv) { return uncsimp::run_cli(argc, argv); }
