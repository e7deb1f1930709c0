#include "trislice/cli.hpp"

int main(int argc, char** argv) {
    return trislice::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
