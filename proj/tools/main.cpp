#include "hfm/cli.hpp"

int main(int argc, char** argv) { return hfm::cli::run(argc, argv); }
