#include "approxlab/cli.hpp"

int main(int argc, char** argv) { return approxlab::cli::run(argc, argv); }
