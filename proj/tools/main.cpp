#include "cli.hpp"

int main(int argc, char** argv) { return heatpade::cli::run(argc, argv); }
