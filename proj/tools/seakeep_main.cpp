#include "seakeep/cli.hpp"

int main(int argc, char** argv) { return seakeep::run_cli(argc, argv); }
