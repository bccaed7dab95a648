#include "oalpha/cli.hpp"

int main(int argc, char** argv) { return oalpha::cli_main(argc, argv); }
