#include <cstdlib>
#include <iostream>
#include <vector>

#include "convextile/selftest.hpp"

// Usage: acceptance [criterion ids...]
int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int k = 1; k < argc; ++k) ids.push_back(std::atoi(argv[k]));
    return ctile::acceptance::run_all(std::cout, ids) ? 1 : 0;
}
