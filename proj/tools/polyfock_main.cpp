#include <iostream>

#include <polyfock/cli.hpp>

int main(int argc, char** argv) {
    return polyfock::cli::run_cli(argc, argv, std::cout, std::cerr);
}
