#pragma once

namespace kanweigh::cli {

/// Runs one command line and returns the process exit code.
int run(int argc, char** argv);

}  // namespace kanweigh::cli
