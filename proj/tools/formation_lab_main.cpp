#include "formation_lab/cli.hpp"

int main(int argc, char** argv) { return formlab::cli_dispatch(argc, argv); }
