#include "wordmap/cli.hpp"

int main(int argc, char** argv) { return wordmap::cli::run(argc, argv); }
