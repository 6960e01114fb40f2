#include "cli.hpp"

int main(int argc, char** argv) { return hjline::cli::run(argc, argv); }
