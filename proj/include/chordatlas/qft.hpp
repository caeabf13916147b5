#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "chordatlas/diagram.hpp"
#include "chordatlas/enumerate.hpp"
#include "chordatlas/map.hpp"
#include "chordatlas/poly.hpp"
#include "chordatlas/report.hpp"

namespace chordatlas {

struct QftConfig {
    int s = 2;
    int xmax = 5;    // truncation of ||.||
    int lmax = 5;    // L-degree compared
    int rho_jet = 0; // 0 picks lmax + xmax + 1
};

// Which chord order and index feed w and A.
enum class IndexKind { IntersectionNu, IntersectionOmega, PeelingOmega };
const char* index_name(IndexKind k);
IndexKind parse_index(const std::string& s); // "nu", "omega-inter", "omega-peel"

// Coefficient symbols a_{k,i}; a specialization may return constants or zero.
using ASymbol = std::function<Poly(int k, int i)>;
Poly a_symbol(int k, int i);
// a_{1,i} -> f_i and a_{k,i} -> 0 for k >= 2; `ones` sets every f_i = 1.
ASymbol single_primitive(bool ones);
// Symbolic except for the listed (k, i) values.
ASymbol specialized(std::map<std::pair<int, int>, mpq_class> values);

// binom(x, k) by falling factorial, any integer x, k >= 0.
mpz_class gbinom(long x, long k);

struct WeightedDiagram {
    Diagram d;
    std::vector<int> weight; // per chord index
};
struct WeightedMap {
    CombMap m;
    std::vector<int> weight; // per half-edge, equal on both halves of an edge
};

mpz_class weight_w(const WeightedDiagram& c, int s, IndexKind k);
mpz_class weight_w_hat(const WeightedDiagram& c, int s, IndexKind k);
Poly weight_A(const WeightedDiagram& c, IndexKind k, const ASymbol& a = a_symbol);

mpz_class map_w(const WeightedMap& m, int s);
mpz_class map_w_hat(const WeightedMap& m, int s);
Poly map_A(const WeightedMap& m, const ASymbol& a = a_symbol);
int omega_root(const CombMap& m);

// Every composition of each size-n object with total weight <= max_total.
void for_each_weighting(int parts, int max_total, const std::function<void(const std::vector<int>&)>& f);
// Per-half-edge weights from per-edge weights, edges numbered by smallest half-edge.
std::vector<int> spread_edge_weights(const CombMap& m, const std::vector<int>& edge_weights);

Poly G_series_diagrams(const QftConfig& cfg, IndexKind k, const ASymbol& a = a_symbol,
                       const Budget& b = default_budget());
Poly G_series_maps(const QftConfig& cfg, const ASymbol& a = a_symbol, const Budget& b = default_budget());

// Right side of the Dyson-Schwinger equation for a given G, with F_k built from a.
Poly dse_rhs(const Poly& G, const QftConfig& cfg, const ASymbol& a);
Report dse_verify_simple(int xmax, int lmax, bool ones, const Budget& b = default_budget());
// a(1, i) plays f_i; a(k, i) for k > 1 must vanish.
Report dse_verify_simple(int xmax, int lmax, const ASymbol& a, const Budget& b = default_budget());
Report dse_verify_general(const QftConfig& cfg, const ASymbol& a = a_symbol, const Budget& b = default_budget());

// Both sides of the refined identity for every stratum (i, j, n), i <= imax.
Report crazy_formula_check(int s, int imax, IndexKind k, const Budget& b = default_budget());

struct MapCombination {
    WeightedMap m1, m2;
    int i = 0;
    std::vector<int> S; // non-decreasing positions 1..rid(m1)
};
WeightedMap map_combine(const WeightedMap& m1, const WeightedMap& m2, int i, const std::vector<int>& S);
MapCombination map_split(const WeightedMap& m);
// Exhaustive round trip and counting over bridgeless maps with sizes summing to at most nmax.
Report map_combination_check(int nmax, const Budget& b = default_budget());

// Sum over weighted bridgeless maps with rid = d of w (or w-hat) A x^||M|| c^omega(root).
Poly Gd_series(const QftConfig& cfg, int d, bool hat, const ASymbol& a = a_symbol, const Budget& b = default_budget());
// The map identity for 2 <= d <= dmax; root_coupled replaces dec_{d2,i} G_{d2} by the exact sum
// of w(M2) a_{d(root),d2-i} A(M2) x^||M2||.
Report map_identity_check(const QftConfig& cfg, int dmax, bool root_coupled, const Budget& b = default_budget());

} // namespace chordatlas
