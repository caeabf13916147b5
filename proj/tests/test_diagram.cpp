#include <map>
#include <set>

#include "chordatlas/diagram.hpp"
#include "chordatlas/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordatlas;

namespace {

std::vector<Diagram> all_diagrams(int n) {
    std::vector<Diagram> out;
    for_each_matching(n, [&](const std::vector<int>& p) { out.push_back(Diagram::from_pairing(p)); });
    return out;
}

std::vector<Diagram> connected(int n) {
    std::vector<Diagram> out;
    for (auto& d : all_diagrams(n))
        if (is_connected(d)) out.push_back(d);
    return out;
}

} // namespace

TEST_CASE("construction and validation") {
    auto d = Diagram::from_pairs({{0, 3}, {1, 5}, {2, 4}});
    CHECK(d.size() == 3);
    CHECK(d.intervals() == 5);
    CHECK(crossings(d) == 2);
    CHECK(Diagram::from_pairs({{0, 1}}) == Diagram::one_chord());
    CHECK_THROWS_AS(Diagram::from_pairs({{0, 2}, {1, 2}}), Error);
    try {
        Diagram::from_pairs({{0, 2}, {1, 2}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicatePoint);
    }
    try {
        Diagram::from_pairs({{1, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReversedPair);
    }
    try {
        Diagram::from_pairs({{0, 1}, {2, 5}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GapInSupport);
    }
}

TEST_CASE("connectivity and indecomposability on small sizes") {
    CHECK(is_connected(Diagram::from_pairs({{0, 2}, {1, 3}})));
    CHECK_FALSE(is_connected(Diagram::from_pairs({{0, 1}, {2, 3}})));
    CHECK_FALSE(is_indecomposable(Diagram::from_pairs({{0, 1}, {2, 3}})));
    int conn = 0, indec = 0;
    for (auto& d : all_diagrams(3)) {
        conn += is_connected(d);
        indec += is_indecomposable(d);
    }
    CHECK(conn == 4);
    CHECK(indec == 10);

    for (int n = 1; n <= 6; ++n)
        for (auto& d : all_diagrams(n)) {
            REQUIRE(is_connected(d) == oracle::connected_by_segments(d));
            REQUIRE(crossings(d) == oracle::crossings_brute(d));
            if (is_connected(d)) REQUIRE(is_indecomposable(d));
            REQUIRE(d.intervals() == 2 * d.size() - 1);
        }
}

TEST_CASE("concat") {
    auto one = Diagram::one_chord();
    CHECK(concat(one, one) == Diagram::from_pairs({{0, 1}, {2, 3}}));
    CHECK(concat(Diagram::from_pairs({{0, 2}, {1, 3}}), one) == Diagram::from_pairs({{0, 2}, {1, 3}, {4, 5}}));
}

TEST_CASE("root chord and diagram insertion") {
    auto one = Diagram::one_chord();
    auto cross = Diagram::from_pairs({{0, 2}, {1, 3}});
    CHECK(insert_root_chord(one, 1) == cross);
    CHECK(insert_root_chord(cross, 3) == Diagram::from_pairs({{0, 4}, {1, 3}, {2, 5}}));
    CHECK_THROWS_AS(insert_root_chord(cross, 4), Error);
    CHECK_THROWS_AS(insert_root_chord(cross, 0), Error);
    CHECK(insert_diagram(one, one, 1) == Diagram::from_pairs({{0, 3}, {1, 2}}));

    // removing the root inverts R_k
    for (int n = 1; n <= 4; ++n)
        for (auto& d : all_diagrams(n))
            for (int k = 1; k <= d.intervals(); ++k) {
                auto r = remove_root_chord(insert_root_chord(d, k));
                REQUIRE(r.rest == d);
                REQUIRE(r.k == k);
            }
}

TEST_CASE("commutation rules for root insertion and diagram insertion") {
    for (int n = 1; n <= 4; ++n)
        for (auto& base : all_diagrams(n))
            for (int m = 1; m <= 2; ++m)
                for (auto& ins : all_diagrams(m)) {
                    if (!is_indecomposable(ins)) continue;
                    int after_r = base.intervals() + 2; // intervals of R_k(base)
                    for (int k = 1; k <= base.intervals(); ++k)
                        for (int l = 1; l <= after_r; ++l) {
                            auto lhs = insert_diagram(insert_root_chord(base, k), ins, l);
                            if (k <= l - 2) {
                                REQUIRE(lhs == insert_root_chord(insert_diagram(base, ins, l - 2), k));
                            } else if (l - 1 >= 1 && l - 1 <= k) {
                                REQUIRE(lhs == insert_root_chord(insert_diagram(base, ins, l - 1), k + 2 * m));
                            }
                        }
                }
}

TEST_CASE("star product factorization is a bijection") {
    auto one = Diagram::one_chord();
    CHECK(star_product(one, one, 1) == Diagram::from_pairs({{0, 2}, {1, 3}}));
    auto f = star_factorize(Diagram::from_pairs({{0, 2}, {1, 3}}));
    CHECK(f.c1 == one);
    CHECK(f.c2 == one);
    CHECK(f.i == 1);
    CHECK_THROWS_AS(star_factorize(one), Error);

    auto c = oracle::c_recurrence(6);
    std::map<int, std::vector<Diagram>> conn;
    for (int n = 1; n <= 6; ++n) conn[n] = connected(n);
    for (int n = 2; n <= 6; ++n) {
        std::set<Diagram> image;
        std::int64_t triples = 0;
        for (int k = 1; k < n; ++k)
            for (auto& c1 : conn[k])
                for (auto& c2 : conn[n - k])
                    for (int i = 1; i <= c2.intervals(); ++i) {
                        auto p = star_product(c1, c2, i);
                        REQUIRE(is_connected(p));
                        auto back = star_factorize(p);
                        REQUIRE(back.c1 == c1);
                        REQUIRE(back.c2 == c2);
                        REQUIRE(back.i == i);
                        image.insert(p);
                        ++triples;
                    }
        CHECK(triples == c[n]);
        CHECK(static_cast<std::int64_t>(image.size()) == c[n]);
        CHECK(static_cast<std::int64_t>(conn[n].size()) == c[n]);
        for (auto& d : conn[n]) {
            auto t = star_factorize(d);
            REQUIRE(star_product(t.c1, t.c2, t.i) == d);
        }
    }
}

TEST_CASE("variant product factorization and iota") {
    auto one = Diagram::one_chord();
    CHECK(varbox_product(one, one, 1) == Diagram::from_pairs({{0, 2}, {1, 3}}));
    auto c = oracle::c_recurrence(6);
    std::map<int, std::vector<Diagram>> conn;
    for (int n = 1; n <= 6; ++n) conn[n] = connected(n);
    for (int n = 2; n <= 6; ++n) {
        std::set<Diagram> image;
        for (int k = 1; k < n; ++k)
            for (auto& c1 : conn[k])
                for (auto& c2 : conn[n - k])
                    for (int i = 1; i <= c2.intervals(); ++i) {
                        auto p = varbox_product(c1, c2, i);
                        REQUIRE(is_connected(p));
                        auto back = varbox_factorize(p);
                        REQUIRE(back.c1 == c1);
                        REQUIRE(back.c2 == c2);
                        REQUIRE(back.i == i);
                        image.insert(p);
                    }
        CHECK(static_cast<std::int64_t>(image.size()) == c[n]);
        std::set<Diagram> iotas;
        for (auto& d : conn[n]) {
            auto t = varbox_factorize(d);
            REQUIRE(varbox_product(t.c1, t.c2, t.i) == d);
            auto im = iota(d);
            REQUIRE(im.size() == d.size());
            REQUIRE(is_connected(im));
            iotas.insert(im);
        }
        CHECK(iotas.size() == conn[n].size());
    }
    CHECK(iota(one) == one);
}

TEST_CASE("enumeration counts against recurrences") {
    auto c = oracle::c_recurrence(7);
    auto b = oracle::b_recurrence(7);
    for (int n = 1; n <= 7; ++n) {
        std::int64_t conn = 0, indec = 0, all = 0;
        for_each_matching(n, [&](const std::vector<int>& p) {
            auto d = Diagram::from_pairing(p);
            conn += is_connected(d);
            indec += is_indecomposable(d);
            ++all;
        });
        std::int64_t dfact = 1;
        for (int k = 1; k <= 2 * n - 1; k += 2) dfact *= k;
        CHECK(all == dfact);
        CHECK(conn == c[n]);
        CHECK(indec == b[n]);
    }
}
