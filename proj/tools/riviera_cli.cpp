#include "riviera/cli.hpp"

int main(int argc, char** argv) { return riviera::cli::run(argc, argv); }
