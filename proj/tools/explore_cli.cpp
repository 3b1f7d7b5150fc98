#include "explore/cli.hpp"

int main(int argc, char** argv) { return explore::run_cli(argc, argv); }
