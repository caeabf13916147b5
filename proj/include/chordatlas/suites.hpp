#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordatlas/enumerate.hpp"
#include "chordatlas/report.hpp"

namespace chordatlas {

struct SuiteOptions {
    Budget budget = default_budget();
    std::uint64_t seed = 20240917;
    int threads = 0; // 0: hardware concurrency
};

struct SuiteReport {
    std::string suite;
    int nmax = 0;
    std::vector<Report> properties; // sorted by name
    double seconds = 0;
    bool ok() const;
};

const std::vector<std::string>& suite_names();
// Suites: counts, commutation, bijection, planarity, transfer, nu-omega, symmetry, ab, qft.
SuiteReport run_suite(const std::string& suite, int nmax, const SuiteOptions& opt = {});
std::string suite_report_to_json(const SuiteReport& r);

} // namespace chordatlas
