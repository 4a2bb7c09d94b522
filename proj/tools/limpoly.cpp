#include "limpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return limpoly::run_cli(argc, argv, std::cout, std::cerr);
}
