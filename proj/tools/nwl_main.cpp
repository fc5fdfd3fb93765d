#include "nwl/cli.hpp"

int main(int argc, char** argv) { return nwl::cli::run(argc, argv); }
