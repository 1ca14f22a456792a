#include <vector>

#include "econlex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return econlex::cli::run(args);
}
