#include "sod/cli.hpp"

int main(int argc, char** argv)
{
    return sod::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
