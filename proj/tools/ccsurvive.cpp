#include "ccs/cli.hpp"

int main(int argc, char** argv) { return ccs::run_command(argc, argv); }
