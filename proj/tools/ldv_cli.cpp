#include "ldv/cli.hpp"

int main(int argc, char** argv) { return ldv::cliMain(argc, argv); }
