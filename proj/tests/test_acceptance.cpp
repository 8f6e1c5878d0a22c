// Prints one PASS/FAIL line per shipped guarantee and exits nonzero if any
// fails. Not a Catch2 binary on purpose: the output is the deliverable.

#include <indpath/acceptance.hpp>

#include <iostream>

int main() {
    int failures = indpath::acceptance::run_all(std::cout);
    return failures == 0 ? 0 : 1;
}
