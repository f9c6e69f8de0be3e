#include "halg/rational.hpp"

#include <cstdio>

int main() {
    std::printf("halg: command-line front end (under construction)\n");
    return 2;
}
