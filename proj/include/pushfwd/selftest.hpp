// The acceptance suite: every top-level criterion as an executable
// check, shared by the test binary and the CLI selftest command.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pushfwd::accept {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CriterionResult> run_criteria();

// Prints one PASS/FAIL line per criterion; true when everything passed.
bool run_all(std::ostream& out);

}  // namespace pushfwd::accept
