#include "relhom/cli.hpp"

int main(int argc, char** argv) { return relhom::cli_main(argc, argv); }
