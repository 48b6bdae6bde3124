#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "euclid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* env = std::getenv("EUCLID_KIT_JSON");
    const bool json_default = env != nullptr && std::strcmp(env, "1") == 0;
    return euclid::cli::run(args, std::cout, std::cerr, json_default);
}
