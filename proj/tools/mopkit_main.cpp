#include "mopkit/cli.hpp"

int main(int argc, char** argv) { return mopkit::run_cli(argc, argv); }
