#include "crosskit/cli.hpp"

int main(int argc, char** argv) { return crosskit::cli_main(argc, argv); }
