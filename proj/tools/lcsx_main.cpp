#include "lcsx/cli.hpp"

int main(int argc, char** argv) { return lcsx::cli::run(argc, argv); }
