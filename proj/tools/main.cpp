#include <iostream>

#include "polyred/cli.hpp"

int main(int argc, char** argv)
{
    return polyred::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
