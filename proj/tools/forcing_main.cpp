#include <iostream>

#include "forcing/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return forcing::runCli(args, std::cout, std::cerr);
}
