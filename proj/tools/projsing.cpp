#include "projsing/cli.hpp"

int main(int argc, char** argv) { return projsing::cli_main(argc, argv); }
