#include <iostream>

#include "tistab/cli.h"

int main(int argc, char **argv) {
    return tistab::cli_main(argc, argv, std::cout, std::cerr);
}
