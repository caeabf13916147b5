#pragma once

#include "chordatlas/diagram.hpp"
#include "chordatlas/map.hpp"

namespace fixtures {

using chordatlas::CombMap;
using chordatlas::Diagram;

// Intersection order 1,2,4,3 differs from first-endpoint order; terminals at ranks 3, 4.
inline Diagram order_example() { return Diagram::from_pairs({{0, 3}, {1, 6}, {2, 4}, {5, 7}}); }

// 13 chords; weight 2 on intersection ranks 5, 6, 8. Found by search against the stated
// terminal positions and (d, omega) multiset; the drawn diagram itself is not recoverable.
inline Diagram thirteen_example() {
    return Diagram::from_pairs({{0, 23}, {1, 11}, {2, 7}, {3, 14}, {4, 25}, {5, 21}, {6, 19},
                                {8, 20}, {9, 18}, {10, 16}, {12, 17}, {13, 15}, {22, 24}});
}
inline const int thirteen_heavy_ranks[] = {5, 6, 8};

inline CombMap two_vertex_map() { return CombMap::from_permutations({1, 2, 0, 4, 3}, {0, 3, 4, 1, 2}, 0); }

} // namespace fixtures
