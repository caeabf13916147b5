#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "chordatlas/bijection.hpp"
#include "chordatlas/enumerate.hpp"
#include "chordatlas/statistics.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chordatlas;

TEST_CASE("one chord") {
    auto d = Diagram::one_chord();
    CHECK(intersection_order(d).sequence == std::vector<int>{0});
    CHECK(peeling_order(d).sequence == std::vector<int>{0});
    CHECK(terminal_chords(d) == std::vector<int>{0});
    CHECK(top_chords(d) == std::vector<int>{0});
    CHECK(nu_vector(d) == std::vector<int>{0});
    CHECK(omega_vector(d, intersection_order(d)) == std::vector<int>{0});
    CHECK(transfer_matches(stat_profile_diagram(d), stat_profile_map(CombMap::trivial())));
}

TEST_CASE("order example") {
    auto d = fixtures::order_example();
    auto o = intersection_order(d);
    CHECK(o.sequence == std::vector<int>{0, 1, 3, 2});
    CHECK(o.sequence != first_endpoint_order(d).sequence);
    CHECK(terminal_positions(d, o) == std::vector<int>{3, 4});
    CHECK(nu_vector(d) == std::vector<int>{0, 0, 2, 1});
    CHECK(intersection_order(Diagram::from_pairs({{0, 2}, {1, 3}})).sequence == std::vector<int>{0, 1});
}

TEST_CASE("nu and omega examples") {
    bool tree2 = false, good = false;
    for (auto& c : enumerate_diagrams(5, DiagramClass::Connected)) {
        tree2 |= nu_vector(c) == std::vector<int>{0, 1, 0, 0, 3};
        good |= omega_vector(c, intersection_order(c)) == std::vector<int>{0, 1, 0, 2, 1};
    }
    CHECK(tree2);
    CHECK(good);

    std::map<std::vector<int>, int> nu, om;
    std::set<Diagram> nu_heavy, om_heavy;
    for (auto& c : enumerate_diagrams(3, DiagramClass::Connected)) {
        auto o = intersection_order(c);
        if (terminal_positions(c, o) != std::vector<int>{3}) continue;
        ++nu[nu_vector(c)];
        ++om[omega_vector(c, o)];
        if (nu_vector(c) == std::vector<int>{0, 1, 1}) nu_heavy.insert(c);
        if (omega_vector(c, o) == std::vector<int>{0, 1, 1}) om_heavy.insert(c);
    }
    std::map<std::vector<int>, int> want{{{0, 1, 1}, 1}, {{0, 0, 2}, 2}};
    CHECK(nu == want);
    CHECK(om == want);
    CHECK(nu_heavy != om_heavy);
}

TEST_CASE("top chord counts at size 3") {
    std::multiset<int> conn, rest;
    for (auto& d : enumerate_diagrams(3, DiagramClass::Indecomposable))
        (is_connected(d) ? conn : rest).insert(static_cast<int>(top_chords(d).size()));
    CHECK(conn == std::multiset<int>{3, 3, 2, 2});
    CHECK(rest == std::multiset<int>{2, 2, 2, 1, 1, 1});
}

TEST_CASE("orders extend the crossing and nesting order") {
    for (int n = 1; n <= 6; ++n) {
        for (auto& d : enumerate_diagrams(n, DiagramClass::Indecomposable)) {
            auto ch = d.chords();
            std::vector<ChordOrder> orders{peeling_order(d)};
            if (is_connected(d)) orders.push_back(intersection_order(d));
            for (auto& o : orders) {
                CHECK(o.sequence.front() == 0);
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (crosses(ch[a], ch[b]) || ch[b].second < ch[a].second) CHECK(o.rank[a] < o.rank[b]);
            }
        }
    }
}

TEST_CASE("intersection and peeling orders share the invariant statistics") {
    for (int n = 1; n <= 6; ++n) {
        for (auto& c : enumerate_diagrams(n, DiagramClass::Connected)) {
            auto io = intersection_order(c), po = peeling_order(c);
            auto ti = terminal_positions(c, io), tp = terminal_positions(c, po);
            int b = ti.front();
            CHECK(tp.front() == b);
            CHECK(ti.back() == n);
            for (int r = 0; r < b; ++r) CHECK(io.sequence[r] == po.sequence[r]);
            auto oi = omega_vector(c, io), op = omega_vector(c, po);
            for (int ch = 0; ch < n; ++ch) CHECK(oi[io.rank[ch] - 1] == op[po.rank[ch] - 1]);
            // (chord at t_j, t_j - t_{j-1}) for j >= 2
            auto alpha = [&](const ChordOrder& o, const std::vector<int>& t) {
                std::multiset<std::pair<int, int>> out;
                for (std::size_t j = 1; j < t.size(); ++j) out.insert({o.sequence[t[j] - 1], t[j] - t[j - 1]});
                return out;
            };
            CHECK(alpha(io, ti) == alpha(po, tp));
        }
    }
}

TEST_CASE("omega sums to the interval count for any order") {
    // the root covers every interval only in indecomposable diagrams
    std::mt19937 rng(7);
    for (int n = 1; n <= 5; ++n) {
        for (auto& d : enumerate_diagrams(n, DiagramClass::Indecomposable)) {
            auto o = first_endpoint_order(d);
            std::shuffle(o.sequence.begin(), o.sequence.end(), rng);
            for (int r = 0; r < n; ++r) o.rank[o.sequence[r]] = r + 1;
            int sum = 0;
            for (int w : omega_vector(d, o)) sum += w + 1;
            CHECK(sum == 2 * n - 1);
        }
    }
}

TEST_CASE("tau trees") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> shapes;
        auto cs = enumerate_diagrams(n, DiagramClass::Connected);
        for (auto& c : cs) {
            auto t = tau_tree(c);
            CHECK(t.leaf_count() == n);
            CHECK(static_cast<int>(t.nodes.size()) == 2 * n - 1);
            std::vector<int> code;
            for (int v : t.preorder()) code.push_back(t.nodes[v].label);
            auto labels = code;
            labels.erase(std::remove(labels.begin(), labels.end(), 0), labels.end());
            std::sort(labels.begin(), labels.end());
            for (int i = 0; i < n; ++i) CHECK(labels[i] == i + 1);
            shapes.insert(code);
        }
        CHECK(shapes.size() == cs.size());
    }
}

TEST_CASE("exhaustive reports") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(nu_omega_equidistribution_check(n).ok());
        CHECK(transfer_check(n).ok());
        CHECK(top_terminal_symmetry_check(n).ok());
    }
}

TEST_CASE("terminal chords count vertices") {
    for (int n = 1; n <= 6; ++n) {
        std::map<int, int> chords, verts;
        for (auto& c : enumerate_diagrams(n, DiagramClass::Connected)) ++chords[static_cast<int>(terminal_chords(c).size())];
        for (auto& m : enumerate_maps(n, MapClass::Bridgeless)) ++verts[m.vertex_count()];
        CHECK(chords == verts);
    }
}

TEST_CASE("map profile") {
    auto m = fixtures::two_vertex_map();
    auto p = stat_profile_map(m);
    CHECK(p.vertices == 2);
    CHECK(p.genus == 0);
    CHECK(p.terminals.back() == 3);
    CHECK(transfer_matches(stat_profile_diagram(phi(m)), p));
}

TEST_CASE("thirteen chord example") {
    auto c = fixtures::thirteen_example();
    auto io = intersection_order(c), po = peeling_order(c);
    CHECK(terminal_positions(c, io) == std::vector<int>{5, 6, 8, 9, 11, 12, 13});
    CHECK(terminal_positions(c, po) == std::vector<int>{5, 6, 7, 9, 10, 12, 13});
    std::vector<int> d(13, 1);
    for (int r : fixtures::thirteen_heavy_ranks) d[io.sequence[r - 1]] = 2;
    for (const auto* o : {&io, &po}) {
        auto om = omega_vector(c, *o);
        std::multiset<std::pair<int, int>> ms;
        for (int r = 0; r < 13; ++r) ms.insert({d[o->sequence[r]], om[r]});
        std::multiset<std::pair<int, int>> want{{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 1}, {1, 1},
                                                {1, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 2}};
        CHECK(ms == want);
    }
}
