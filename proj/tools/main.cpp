#include "lgc/cli.hpp"

int main(int argc, char** argv) { return lgc::cli::run(argc, argv); }
