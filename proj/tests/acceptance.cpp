// Runs the acceptance suite and prints one verdict line per criterion.
#include <iostream>

#include "pushfwd/selftest.hpp"

int main() {
    return pushfwd::accept::run_all(std::cout) ? 0 : 1;
}
