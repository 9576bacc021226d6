#include <iostream>

#include "ecodyck/cli.hpp"

int main(int argc, char** argv)
{
    return ecodyck::cli::run(argc, argv, std::cout, std::cerr);
}
