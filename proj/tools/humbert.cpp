#include "humbert/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    try {
        return humbert::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
