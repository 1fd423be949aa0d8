#include "kanweigh/cli.hpp"

int main(int argc, char** argv) { return kanweigh::cli::run(argc, argv); }
