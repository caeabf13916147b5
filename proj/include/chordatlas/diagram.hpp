#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace chordatlas {

// A rooted chord diagram stored as the partner array of its 2n points.
// Chords are indexed 0..n-1 by increasing left endpoint; chord 0 is the root.
class Diagram {
public:
    Diagram() = default;

    static Diagram from_pairs(const std::vector<std::pair<int, int>>& pairs);
    static Diagram from_pairing(std::vector<int> pairing);
    // Each label occurs exactly twice; labels are otherwise arbitrary.
    static Diagram from_word(const std::vector<int>& word);
    static Diagram one_chord();

    int size() const { return static_cast<int>(p_.size()) / 2; }
    int points() const { return static_cast<int>(p_.size()); }
    int intervals() const { return points() - 1; }
    int partner(int point) const { return p_[point]; }
    const std::vector<int>& pairing() const { return p_; }

    std::vector<std::pair<int, int>> chords() const;
    // chord index of each point
    std::vector<int> chord_of_point() const;
    std::vector<int> word() const { return chord_of_point(); }

    bool empty() const { return p_.empty(); }

    auto operator<=>(const Diagram&) const = default;
    bool operator==(const Diagram&) const = default;

private:
    std::vector<int> p_;
};

bool crosses(std::pair<int, int> a, std::pair<int, int> b);

bool is_connected(const Diagram& d);
bool is_indecomposable(const Diagram& d);
Diagram concat(const Diagram& a, const Diagram& b);
int crossings(const Diagram& d);

// intersection graph: out[c] lists chords e with left(c) < left(e) < right(c) < right(e)
std::vector<std::vector<int>> intersection_graph(const Diagram& d);

// R_k: new root chord whose right endpoint lands in interval k.
Diagram insert_root_chord(const Diagram& d, int k);
// D_{e,k}: e inserted as a block inside interval k of d.
Diagram insert_diagram(const Diagram& d, const Diagram& e, int k);

struct RootRemoval {
    Diagram rest;
    int k; // interval of `rest` that held the right endpoint of the root
};
// Inverse of R_k; k may fall outside 1..2|rest|-1 when the root crosses nothing.
RootRemoval remove_root_chord(const Diagram& d);

// Restriction to a subset of chords, keeping relative order.
Diagram restrict_chords(const Diagram& d, const std::vector<int>& chords);

struct Factorization {
    Diagram c1, c2;
    int i;
};

Diagram star_product(const Diagram& c1, const Diagram& c2, int i);
Factorization star_factorize(const Diagram& c);
Diagram varbox_product(const Diagram& c1, const Diagram& c2, int i);
Factorization varbox_factorize(const Diagram& c);
Diagram iota(const Diagram& c);

// Every perfect matching on 2n points, in lexicographic order of pairing arrays.
template <class F>
void for_each_matching(int n, F&& f);

} // namespace chordatlas

#include "chordatlas/detail/matching_enum.hpp"
