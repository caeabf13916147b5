#pragma once

#include <string>
#include <vector>

namespace chordatlas {

// Outcome of an exhaustive check.
struct Report {
    std::string name;
    int n = 0;
    long checked = 0;
    long violations = 0;
    std::vector<std::string> details; // first few violations, or summary lines
    bool ok() const { return violations == 0; }
};

} // namespace chordatlas
