#include <jdefect/cli.hpp>

int main(int argc, char** argv) { return jdefect::cli::run(argc, argv); }
