#pragma once

#include <string>
#include <vector>

#include "chordatlas/diagram.hpp"
#include "chordatlas/map.hpp"

namespace chordatlas {

enum class DiagramClass { All, Connected, Indecomposable };
enum class MapClass { All, Bridgeless, Planar };

DiagramClass parse_diagram_class(const std::string& s);
MapClass parse_map_class(const std::string& s);

struct Budget {
    int diagrams = 8;
    int maps = 6;
    int qft = 5;
    bool allow_large = false;
};

// Defaults overridden by CHORD_ATLAS_BUDGET, e.g. "diagrams=9,maps=7,qft=6".
Budget default_budget();
void check_budget(const Budget& b, const char* what, int requested, int limit);

bool in_class(const Diagram& d, DiagramClass c);
std::vector<Diagram> enumerate_diagrams(int n, DiagramClass c, const Budget& b = default_budget());
// Closed maps of size n up to rooted isomorphism, canonical representatives sorted by code.
std::vector<CombMap> enumerate_maps(int n, MapClass c, const Budget& b = default_budget());

} // namespace chordatlas
