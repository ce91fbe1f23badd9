#include "cli.hpp"

int main(int argc, char** argv) { return gsub::cli::run(argc, argv); }
