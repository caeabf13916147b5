#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "chordatlas/diagram.hpp"
#include "chordatlas/enumerate.hpp"
#include "chordatlas/poly.hpp"
#include "chordatlas/report.hpp"

namespace chordatlas {

// Index 0 holds c_1 (resp. b_1).
std::vector<mpz_class> c_seq(int nmax);
std::vector<mpz_class> b_seq(int nmax);
mpz_class double_factorial(int odd);

// z^(n-1) u^(top chords) v^(crossings), summed over diagrams of size n <= zmax + 1.
Poly series_B(int zmax, const Budget& b = default_budget());
Poly series_C(int zmax, const Budget& b = default_budget());

struct MarkedDiagram {
    Diagram d;
    std::vector<int> marked; // subset of top_chords(d), increasing
};

Diagram ab_combine(const MarkedDiagram& d1, const Diagram& d2);
std::pair<MarkedDiagram, Diagram> ab_factorize(const Diagram& d);

Report verify_ab(int nmax, const Budget& b = default_budget());
// [z^(n-1)] C(z,1,1) against bridgeless map counts; details carry the (size, top) table.
Report lambda_count_check(int nmax, const Budget& b = default_budget());

} // namespace chordatlas
