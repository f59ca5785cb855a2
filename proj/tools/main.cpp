#include "codeal/cli.hpp"

int main(int argc, char** argv) { return codeal::run_cli(argc, argv); }
