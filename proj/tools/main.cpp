#include "commands.hpp"

int main(int argc, char** argv) { return curskel::cli::run_cli(argc, argv); }
