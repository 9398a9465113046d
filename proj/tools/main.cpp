#include <iostream>

#include "orbit_duality/cli.hpp"

int main(int argc, char** argv) {
    auto result = orbit_duality::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
