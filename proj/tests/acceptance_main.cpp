// Runs the acceptance suite; prints one pass/fail line per criterion and
// exits nonzero when any criterion fails.

#include <iostream>
#include <string>

#include "hexflip/acceptance.hpp"

int main(int argc, char** argv) {
    std::string filter;
    if (argc > 1) filter = argv[1];
    int failures = hexflip::acceptance::run_checks(filter, std::cout);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
