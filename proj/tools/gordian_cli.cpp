#include "gordian/cli.hpp"

int main(int argc, char** argv) { return gordian::cli_main(argc, argv); }
