#include <string>
#include <vector>

#include "folcone/cli.hpp"

int main(int argc, char** argv) {
    return folcone::cli_dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
