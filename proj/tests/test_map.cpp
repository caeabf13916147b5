#include <random>
#include <set>

#include "chordatlas/enumerate.hpp"
#include "chordatlas/error.hpp"
#include "chordatlas/map.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordatlas;

namespace {

CombMap figure_map() { return CombMap::from_permutations({1, 2, 0, 4, 3}, {0, 3, 4, 1, 2}, 0); }
CombMap loop_map() { return CombMap::from_permutations({1, 2, 0}, {0, 2, 1}, 0); }

CombMap relabel(const CombMap& m, const std::vector<int>& perm) {
    int n = m.half_edges();
    std::vector<int> s(n), a(n);
    for (int h = 0; h < n; ++h) {
        s[perm[h]] = perm[m.sigma(h)];
        a[perm[h]] = perm[m.alpha(h)];
    }
    return CombMap::from_permutations(s, a, perm[m.root()]);
}

bool same(const CombMap& a, const CombMap& b) { return canonical_code(a) == canonical_code(b); }

} // namespace

TEST_CASE("construction and errors") {
    auto m = figure_map();
    CHECK(m.vertex_count() == 2);
    CHECK(m.size() == 3);
    CHECK(m.face_count() == 2);
    CHECK(euler_characteristic(m) == 2);
    CHECK(is_planar(m));
    CHECK(is_bridgeless(m));
    CHECK(CombMap::trivial().size() == 1);
    CHECK(euler_characteristic(CombMap::trivial()) == 2);
    auto l = loop_map();
    CHECK(l.vertex_count() == 1);
    CHECK(l.size() == 2);
    auto code = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    CHECK(code([] { CombMap::from_permutations({0, 1, 2}, {1, 0, 2}, 2); }) == ErrorCode::NotTransitive);
    CHECK(code([] { CombMap::from_permutations({0, 1}, {1, 1}, 0); }) == ErrorCode::NotInvolution);
    CHECK(code([] { CombMap::from_permutations({1, 2, 0}, {1, 0, 2}, 0); }) == ErrorCode::RootNotFixed);
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937 rng(7);
    auto m = figure_map();
    for (int t = 0; t < 50; ++t) {
        std::vector<int> perm(m.half_edges());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(relabel(m, perm)) == canonical_code(m));
    }
}

TEST_CASE("map enumeration against brute force and recurrences") {
    auto b = oracle::b_recurrence(6);
    auto c = oracle::c_recurrence(6);
    for (int n = 1; n <= 4; ++n) {
        auto brute = oracle::brute_force_map_codes(n);
        std::set<std::vector<int>> gen;
        for (auto& m : enumerate_maps(n, MapClass::All)) gen.insert(canonical_code(m));
        CHECK(gen == brute);
    }
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<std::int64_t>(enumerate_maps(n, MapClass::All).size()) == b[n]);
        CHECK(static_cast<std::int64_t>(enumerate_maps(n, MapClass::Bridgeless).size()) == c[n]);
    }
    int bridged = 0;
    for (auto& m : enumerate_maps(2, MapClass::All))
        if (!is_bridgeless(m)) {
            ++bridged;
            CHECK(bridges(m).size() == 1);
        }
    CHECK(bridged == 1);
    int nonplanar = 0;
    for (auto& m : enumerate_maps(3, MapClass::All)) {
        if (!is_planar(m)) {
            ++nonplanar;
            CHECK(euler_characteristic(m) == 0);
        }
    }
    CHECK(nonplanar == 1);
}

TEST_CASE("corner labelings") {
    CHECK(bridge_first_labeling(CombMap::trivial()) == std::vector<int>{1});
    for (int n = 1; n <= 6; ++n)
        for (auto& m : enumerate_maps(n, MapClass::All)) {
            auto bfl = bridge_first_labeling(m);
            std::vector<int> sorted = bfl;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < m.half_edges(); ++i) REQUIRE(sorted[i] == i + 1);
            REQUIRE(bfl == tree_tour_labeling(m));

            auto dfs = rightmost_dfs(m);
            int tree_halves = 0;
            for (int h = 0; h < m.half_edges(); ++h) tree_halves += dfs.tree[h];
            REQUIRE((tree_halves - 1) / 2 == m.vertex_count() - 1);
            auto deg = in_degrees_by_visit(m);
            int total = 0;
            for (int x : deg) total += x;
            REQUIRE(total == m.size());
            auto lab = dfs_labeling(m);
            REQUIRE(lab[m.root()] == 1);
            REQUIRE(*std::max_element(lab.begin(), lab.end()) == m.size());
            int e = euler_characteristic(m);
            REQUIRE(e % 2 == 0);
            REQUIRE(e <= 2);
        }
}

TEST_CASE("root edge insertion and bridge insertion") {
    auto t = CombMap::trivial();
    auto l = insert_root_edge(t, 1);
    CHECK(same(l, loop_map()));
    CHECK(is_bridgeless(l));
    CHECK_THROWS_AS(insert_root_edge(t, 2), Error);
    auto b = insert_map_bridge(t, t, 1);
    CHECK(bridges(b).size() == 1);
    for (int n = 1; n <= 4; ++n)
        for (auto& m : enumerate_maps(n, MapClass::All))
            for (int k = 1; k <= m.half_edges(); ++k) {
                auto r = remove_root_edge(insert_root_edge(m, k));
                REQUIRE(same(r.rest, m));
                REQUIRE(r.k == k);
            }
}

TEST_CASE("commutation rules for maps") {
    for (int n = 1; n <= 4; ++n)
        for (auto& base : enumerate_maps(n, MapClass::All))
            for (int s = 1; s <= 2; ++s)
                for (auto& ins : enumerate_maps(s, MapClass::All)) {
                    int after_r = base.half_edges() + 2;
                    for (int k = 1; k <= base.half_edges(); ++k)
                        for (int l = 1; l <= after_r; ++l) {
                            auto lhs = insert_map_bridge(insert_root_edge(base, k), ins, l);
                            if (k <= l - 2) {
                                REQUIRE(same(lhs, insert_root_edge(insert_map_bridge(base, ins, l - 2), k)));
                            } else if (l - 1 >= 1 && l - 1 <= k) {
                                REQUIRE(same(lhs, insert_root_edge(insert_map_bridge(base, ins, l - 1), k + 2 * s)));
                            }
                        }
                }
}

TEST_CASE("map star product is a bijection") {
    auto t = CombMap::trivial();
    CHECK(same(map_star_product(t, t, 1), loop_map()));
    auto c = oracle::c_recurrence(6);
    for (int n = 2; n <= 6; ++n) {
        std::set<std::vector<int>> image;
        std::int64_t triples = 0;
        for (int k = 1; k < n; ++k)
            for (auto& m1 : enumerate_maps(k, MapClass::Bridgeless))
                for (auto& m2 : enumerate_maps(n - k, MapClass::Bridgeless))
                    for (int i = 1; i <= m2.half_edges(); ++i) {
                        auto p = map_star_product(m1, m2, i);
                        REQUIRE(is_bridgeless(p));
                        image.insert(canonical_code(p));
                        ++triples;
                        if (n <= 5) {
                            auto f = map_star_factorize(p);
                            REQUIRE(same(f.m1, m1));
                            REQUIRE(same(f.m2, m2));
                            REQUIRE(f.i == i);
                        }
                    }
        CHECK(triples == c[n]);
        CHECK(static_cast<std::int64_t>(image.size()) == c[n]);
    }
}

TEST_CASE("internal corners") {
    CHECK(internal_corners(CombMap::trivial()).empty());
    auto l = loop_map();
    auto in = internal_corners(l);
    REQUIRE(in.size() == 1);
    // the corner between the two halves of the loop
    CHECK(l.sigma(in[0]) != l.root());
    CHECK(in[0] != l.root());
    for (auto& m : enumerate_maps(3, MapClass::Planar)) CHECK(internal_corners(m).size() < 5u);
}
