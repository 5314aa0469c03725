#include "cli_app.hpp"

int main(int argc, char** argv) { return gamma_forms::cli::run(argc, argv); }
