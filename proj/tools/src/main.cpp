#include "gqforge_cli/cli.hpp"

int main(int argc, char** argv) { return gqforge::cli::run(argc, argv); }
