#include "wg/cli.hpp"

int main(int argc, char** argv) { return wg::cli_main(argc, argv); }
