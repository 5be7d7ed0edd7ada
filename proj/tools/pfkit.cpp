#include "pfkit/cli/run.hpp"

int main(int argc, char** argv) { return pfkit::cli::run(argc, argv); }
