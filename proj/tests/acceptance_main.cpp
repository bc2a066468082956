#include <iostream>

#include "wd/selfcheck.hpp"

int main() {
    auto results = wd::run_acceptance(std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}
