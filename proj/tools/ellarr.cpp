#include "ellarr/cli.hpp"

int main(int argc, char** argv) { return ellarr::cli::main(argc, argv); }
