#include "snsim/cli.hpp"

int main(int argc, char** argv) { return snsim::cli_main(argc, argv); }
