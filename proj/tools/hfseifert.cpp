#include "hfseifert/cli/run.hpp"

int main(int argc, char** argv) { return hfs::cli::run(argc, argv); }
