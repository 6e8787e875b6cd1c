#include "lyucalc/cli.hpp"

int main(int argc, char** argv) { return lyu::run_cli(argc, argv); }
