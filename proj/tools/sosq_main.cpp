#include <iostream>
#include <string>
#include <vector>

#include "sosq/cli.hpp"

int main(int argc, char** argv)
{
    return sosq::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
