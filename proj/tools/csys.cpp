#include <iostream>
#include <string>
#include <vector>

#include "cohsys/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return cohsys::cli::run(args, std::cout, std::cerr);
}
