#include <iostream>
#include <string>
#include <vector>

#include <liechar/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return liechar::run(args, std::cout, std::cerr);
}
