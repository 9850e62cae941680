#include "htw/cli.hpp"

int main(int argc, char** argv) { return htw::run_cli(argc, argv); }
