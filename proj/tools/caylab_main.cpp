#include "caylab/cli.hpp"

int main(int argc, char** argv) { return caylab::run_cli(argc, argv); }
