#pragma once

#include <compare>
#include <vector>

namespace chordatlas {

// A rooted combinatorial map on half-edges 0..m-1. sigma turns counterclockwise
// around a vertex, alpha pairs the two halves of an edge, alpha(root) = root.
// The corner of half-edge h sits between h and sigma(h).
class CombMap {
public:
    CombMap() = default;

    static CombMap from_permutations(std::vector<int> sigma, std::vector<int> alpha, int root);
    static CombMap trivial();

    int half_edges() const { return static_cast<int>(sigma_.size()); }
    int sigma(int h) const { return sigma_[h]; }
    int alpha(int h) const { return alpha_[h]; }
    int sigma_inv(int h) const;
    int root() const { return root_; }
    const std::vector<int>& sigma_perm() const { return sigma_; }
    const std::vector<int>& alpha_perm() const { return alpha_; }

    int size() const; // number of alpha orbits
    bool dangling(int h) const { return alpha_[h] == h; }
    bool closed() const; // root is the only dangling edge

    // orbit index per half-edge; orbit numbering follows smallest half-edge
    std::vector<int> vertex_of() const;
    int vertex_count() const;
    std::vector<int> edge_of() const;
    int face_count() const;

    auto operator<=>(const CombMap&) const = default;
    bool operator==(const CombMap&) const = default;

private:
    std::vector<int> sigma_, alpha_;
    int root_ = 0;
};

struct Canonical {
    CombMap map;               // relabeled representative
    std::vector<int> relabel;  // old half-edge -> new half-edge
};
// Relabel half-edges in first-visit order from the root; equal results iff isomorphic.
Canonical canonical_form(const CombMap& m);
std::vector<int> canonical_code(const CombMap& m);

int euler_characteristic(const CombMap& m);
bool is_planar(const CombMap& m);
int genus(const CombMap& m);

// Bridges, reported by the smaller half-edge of each bridge edge.
std::vector<int> bridges(const CombMap& m);
bool is_bridgeless(const CombMap& m);

// Bridge First Labeling: label (1-based) of the corner of each half-edge.
std::vector<int> bridge_first_labeling(const CombMap& m);
int corner_with_label(const CombMap& m, int k);

struct DfsResult {
    std::vector<int> vertex_order;  // vertex ids in visit order
    std::vector<int> visit_pos;     // vertex id -> position (0-based)
    std::vector<int> entry;         // vertex id -> half-edge through which it was entered (root for the root vertex)
    std::vector<char> ingoing;      // per half-edge
    std::vector<char> tree;         // per half-edge: its edge lies in the spanning tree (root counted)
    std::vector<int> vertex;        // per half-edge vertex id
};
DfsResult rightmost_dfs(const CombMap& m);

// Corner order of the spanning-tree tour for the rightmost DFS tree.
std::vector<int> tree_tour_labeling(const CombMap& m);

// DFS-labeling: label per corner (per half-edge), values 1..size.
std::vector<int> dfs_labeling(const CombMap& m);
// Outgoing half-edges passed clockwise from ingoing half-edge g before the next ingoing one.
int omega_edge(const CombMap& m, const DfsResult& dfs, int g);
int rid(const CombMap& m);
std::vector<int> in_degrees_by_visit(const CombMap& m);

// R_k: new root edge from the root corner to the corner labeled k.
CombMap insert_root_edge(const CombMap& m, int k);
// B_{m2,k}: m2 hung by a bridge at the corner labeled k.
CombMap insert_map_bridge(const CombMap& m, const CombMap& m2, int k);

struct EdgeRemoval {
    CombMap rest;
    int k;
};
// Inverse of R_k; requires that the root edge is not a bridge.
EdgeRemoval remove_root_edge(const CombMap& m);

struct BridgeCut {
    CombMap near;       // side holding the root
    CombMap far;        // rooted at the far half of the bridge
    int k;              // label in `near` of the corner that held the bridge
    std::vector<int> near_index, far_index; // old half-edge -> new, -1 if absent
};
BridgeCut cut_bridge(const CombMap& m, int h);

// Submap on the kept half-edges; sigma skips removed ones.
CombMap restrict_map(const CombMap& m, const std::vector<char>& keep, int new_root, std::vector<int>* old_to_new);

CombMap map_star_product(const CombMap& m1, const CombMap& m2, int i);
struct MapFactorization {
    CombMap m1, m2;
    int i;
};
MapFactorization map_star_factorize(const CombMap& m);

// Corners (half-edges) whose face is not the root face.
std::vector<int> internal_corners(const CombMap& m);

} // namespace chordatlas
