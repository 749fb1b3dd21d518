#include "cli.hpp"

int main(int argc, char** argv) { return qwall::cli::main_entry(argc, argv); }
