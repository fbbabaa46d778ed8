#include <iostream>

#include "topoinf/cli.hpp"

int main(int argc, char** argv)
{
    return topoinf::run_cli(argc, argv, std::cout, std::cerr);
}
