#include "qwt/cli.hpp"

int main(int argc, char** argv) { return qwt::run_cli(argc, argv); }
