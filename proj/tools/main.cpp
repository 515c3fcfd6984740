#include "horn/cli.hpp"

int main(int argc, char** argv) { return horn::run_command(argc, argv); }
