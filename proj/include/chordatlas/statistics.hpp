#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chordatlas/diagram.hpp"
#include "chordatlas/map.hpp"
#include "chordatlas/report.hpp"

namespace chordatlas {

enum class OrderKind { Intersection, Peeling, FirstEndpoint };
const char* order_name(OrderKind k);
OrderKind parse_order(const std::string& s);

struct ChordOrder {
    OrderKind kind;
    std::vector<int> rank;     // chord index -> 1..n
    std::vector<int> sequence; // rank - 1 -> chord index
};

ChordOrder intersection_order(const Diagram& c);
ChordOrder peeling_order(const Diagram& d);
ChordOrder first_endpoint_order(const Diagram& d);
ChordOrder make_order(const Diagram& d, OrderKind k);

// Chords whose crossing chords all start to their left.
std::vector<int> terminal_chords(const Diagram& d);
// Ranks of the terminal chords in the given order, increasing.
std::vector<int> terminal_positions(const Diagram& d, const ChordOrder& o);
// Chords not below any other chord.
std::vector<int> top_chords(const Diagram& d);

struct TauTree {
    struct Node {
        int left = -1, right = -1, parent = -1;
        int label = 0; // leaves only, 1..n
    };
    std::vector<Node> nodes;
    int root = 0;
    std::vector<int> preorder() const;
    int leaf_count() const;
};

TauTree tau_tree(const Diagram& c);
// Indexed by intersection rank - 1.
std::vector<int> nu_vector(const Diagram& c);
// Indexed by rank - 1; entries are (covered intervals left) - 1.
std::vector<int> omega_vector(const Diagram& d, const ChordOrder& o);

Report nu_omega_equidistribution_check(int n);

struct StatProfile {
    int n = 0;
    std::vector<int> terminals; // positions t_1 < ... < t_l
    int b = 0;
    std::vector<int> gaps;      // t_j - t_{j-1}, with t_0 = 0
    std::vector<int> omega;
    std::optional<int> top_count;
    std::optional<std::vector<int>> nu;
    std::optional<int> crossings;
    std::optional<int> vertices;
    std::optional<int> rid;
    std::optional<std::vector<int>> in_degrees;
    std::optional<int> genus;
};

// Peeling order; nu is filled when d is connected.
StatProfile stat_profile_diagram(const Diagram& d);
StatProfile stat_profile_map(const CombMap& m);
// Fields shared by both sides agree.
bool transfer_matches(const StatProfile& diagram_side, const StatProfile& map_side);

Report transfer_check(int n);
// Joint (terminal count, top count) matrix over indecomposable diagrams of size n.
std::map<std::pair<int, int>, long> top_terminal_distribution(int n);
Report top_terminal_symmetry_check(int n);

} // namespace chordatlas
