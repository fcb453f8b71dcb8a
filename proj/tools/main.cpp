#include "globdyn/cli.hpp"

int main(int argc, char** argv) { return globdyn::cli::run(argc, argv); }
