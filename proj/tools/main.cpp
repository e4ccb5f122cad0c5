#include "gfnn/cli.hpp"

int main(int argc, char** argv) { return gfnn::run_cli(argc, argv); }
