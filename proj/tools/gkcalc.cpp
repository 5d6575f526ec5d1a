#include <iostream>

#include "gk/cli.hpp"

int main(int argc, char** argv)
{
    return gk::cli::run(argc, argv, std::cout, std::cerr);
}
