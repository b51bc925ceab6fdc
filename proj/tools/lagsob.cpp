#include "lagsob/cli.hpp"

int main(int argc, char** argv) { return lagsob::cli::run(argc, argv); }
