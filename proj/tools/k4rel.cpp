#include "k4cube/cli.hpp"

int main(int argc, char** argv) { return k4cube::run_cli(argc, argv); }
