#include "fusionwitt/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return fusionwitt::cli::main_entry(argc, argv, std::cout, std::cerr);
}
