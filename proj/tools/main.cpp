#include "treescope/cli.hpp"

int main(int argc, char** argv) { return treescope::run(argc, argv); }
