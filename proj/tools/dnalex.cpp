#include <dnalex/cli.hpp>

int main(int argc, char** argv) { return dnalex::cli::run(argc, argv); }
