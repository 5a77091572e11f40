#include <vector>

#include "pcvp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pcvp::run_cli(args);
}
