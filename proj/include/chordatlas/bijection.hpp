#pragma once

#include <vector>

#include "chordatlas/diagram.hpp"
#include "chordatlas/map.hpp"

namespace chordatlas {

Diagram theta(const CombMap& m);
CombMap theta_inv(const Diagram& c);
Diagram phi(const CombMap& m);
CombMap phi_inv(const Diagram& d);

template <class Obj>
struct RootDecomposition {
    Obj core;
    std::vector<std::pair<Obj, int>> grafts; // applied right to left, indices non-decreasing
};

RootDecomposition<Diagram> decompose_diagram(const Diagram& d);
RootDecomposition<CombMap> decompose_map(const CombMap& m);
Diagram recompose(const RootDecomposition<Diagram>& r);
CombMap recompose(const RootDecomposition<CombMap>& r);

Diagram theta_bar(const CombMap& m);

// Some chord r ends under a component root s and another chord t of the
// component of s among chords starting at or after s.
bool has_forbidden_pattern(const Diagram& d);
// Literal chain form: d0=s,...,dm=t crossing left to right, r crossing exactly d0 and dm.
bool has_chain_pattern(const Diagram& d);
std::vector<int> blocked_intervals(const Diagram& d);

bool is_bridge(const CombMap& m, int h);

} // namespace chordatlas
