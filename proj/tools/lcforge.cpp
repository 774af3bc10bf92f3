#include "lcforge/cli.hpp"

int main(int argc, char** argv) { return lcforge::cli::run(argc, argv); }
