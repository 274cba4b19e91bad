#include "lieinv/cli.hpp"

int main(int argc, char** argv) { return lieinv::cli::run(argc, argv); }
