#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    const auto outcome = sf::cli::run(std::vector<std::string>(argv, argv + argc));
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.code;
}
