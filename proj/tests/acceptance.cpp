// One line per acceptance criterion. With --expect-fail LIST the exit status is 0 iff exactly
// the listed criteria fail; without it, 0 iff all pass.
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "chordatlas/bijection.hpp"
#include "chordatlas/enumerate.hpp"
#include "chordatlas/genfun.hpp"
#include "chordatlas/qft.hpp"
#include "chordatlas/statistics.hpp"
#include "chordatlas/suites.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chordatlas;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        note += (note.empty() ? "" : "; ") + what;
    }
};

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

void suite_into(Outcome& o, const std::string& suite, int n) {
    auto r = run_suite(suite, n);
    for (auto& p : r.properties)
        o.require(p.ok(), suite + "/" + p.name + " " + std::to_string(p.violations) + " of " + std::to_string(p.checked) +
                              (p.details.empty() ? "" : " (" + p.details.front() + ")"));
}

Outcome counting_connected() {
    Outcome o;
    auto rec = oracle::c_recurrence(8);
    std::vector<long> dia, maps;
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 8; ++n) dia.push_back(static_cast<long>(enumerate_diagrams(n, DiagramClass::Connected).size()));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (int n = 1; n <= 6; ++n) maps.push_back(static_cast<long>(enumerate_maps(n, MapClass::Bridgeless).size()));
    std::vector<long> want{1, 1, 4, 27, 248, 2830};
    o.require(std::vector<long>(dia.begin(), dia.begin() + 6) == want, "diagrams " + join(dia));
    o.require(maps == want, "maps " + join(maps));
    for (int n = 1; n <= 8; ++n) o.require(dia[n - 1] == rec[n], "recurrence at n=" + std::to_string(n));
    o.require(secs < 120, "diagram enumeration to n=8 took " + std::to_string(secs) + "s");
    if (o.pass) {
        std::ostringstream s;
        s.precision(2);
        s << std::fixed << "diagrams " << join(dia) << " (n<=8 in " << secs << "s), maps " << join(maps);
        o.note = s.str();
    }
    return o;
}

Outcome counting_all() {
    Outcome o;
    auto rec = oracle::b_recurrence(6);
    std::vector<long> dia, maps;
    for (int n = 1; n <= 6; ++n) {
        dia.push_back(static_cast<long>(enumerate_diagrams(n, DiagramClass::Indecomposable).size()));
        maps.push_back(static_cast<long>(enumerate_maps(n, MapClass::All).size()));
    }
    std::vector<long> first{1, 2, 10, 74};
    o.require(std::vector<long>(dia.begin(), dia.begin() + 4) == first, "diagrams " + join(dia));
    o.require(std::vector<long>(maps.begin(), maps.begin() + 4) == first, "maps " + join(maps));
    for (int n = 1; n <= 6; ++n) o.require(dia[n - 1] == rec[n] && maps[n - 1] == rec[n], "b_n at n=" + std::to_string(n));
    if (o.pass) o.note = "indecomposable diagrams and maps " + join(dia);
    return o;
}

Outcome transfer() {
    Outcome o;
    suite_into(o, "transfer", 6);
    long checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (auto& m : enumerate_maps(n, MapClass::All)) {
            ++checked;
            auto d = phi(m);
            if (static_cast<int>(terminal_chords(d).size()) != m.vertex_count()) o.require(false, "vertex count at n=" + std::to_string(n));
        }
    if (o.pass) o.note = "profiles agree on all maps n<=6; #vertices = #terminal chords on " + std::to_string(checked) + " maps";
    return o;
}

Outcome nu_omega() {
    Outcome o;
    suite_into(o, "nu-omega", 7);
    std::map<std::vector<int>, int> nu, om;
    for (auto& c : enumerate_diagrams(3, DiagramClass::Connected)) {
        auto io = intersection_order(c);
        if (terminal_positions(c, io) != std::vector<int>{3}) continue;
        ++nu[nu_vector(c)];
        ++om[omega_vector(c, io)];
    }
    std::map<std::vector<int>, int> want{{{0, 1, 1}, 1}, {{0, 0, 2}, 2}};
    o.require(nu == want && om == want, "n=3, S={3} split differs");
    if (o.pass) o.note = "equal class sizes for all (vector, S), n<=7; n=3, S={3}: (0,1,1) x1, (0,0,2) x2 on both sides";
    return o;
}

Outcome order_invariance() {
    Outcome o;
    for (int s : {1, 2, 3}) {
        QftConfig cfg{s, 5, 5, 0};
        Poly nu = G_series_diagrams(cfg, IndexKind::IntersectionNu);
        o.require(nu == G_series_diagrams(cfg, IndexKind::IntersectionOmega), "omega-inter differs at s=" + std::to_string(s));
        o.require(nu == G_series_diagrams(cfg, IndexKind::PeelingOmega), "omega-peel differs at s=" + std::to_string(s));
        o.require(nu == G_series_maps(cfg), "map series differs at s=" + std::to_string(s));
    }
    if (o.pass) o.note = "nu, omega-inter, omega-peel and the map series agree through x^5 for s=1,2,3";
    return o;
}

WeightedDiagram by_rank(const Diagram& d, const std::vector<int>& rank_weights) {
    auto io = intersection_order(d);
    std::vector<int> w(d.size());
    for (int r = 0; r < d.size(); ++r) w[io.sequence[r]] = rank_weights[r];
    return {d, w};
}

Outcome qft_values() {
    Outcome o;
    auto d = fixtures::order_example();
    auto nu = IndexKind::IntersectionNu;
    auto a = [](int k, int i) { return a_symbol(k, i); };
    o.require(weight_A(by_rank(d, {1, 1, 1, 1}), nu) == a(1, 0) * a(1, 0) * a(1, 1), "A with unit weights");
    o.require(weight_A(by_rank(d, {2, 1, 1, 1}), nu) == a(1, 0) * a(2, 0) * a(1, 1), "A with chord 1 heavy");
    o.require(weight_A(by_rank(d, {1, 1, 1, 2}), nu) == a(1, 0) * a(1, 0) * a(2, 1), "A with chord 4 heavy");
    o.require(weight_w(by_rank(d, {1, 1, 1, 1}), 2, nu) == 1 && weight_w(by_rank(d, {2, 2, 2, 2}), 1, nu) == 1, "w with weights 2/s");
    auto w2 = weight_w(by_rank(d, {1, 1, 2, 1}), 2, nu), w3 = weight_w(by_rank(d, {1, 1, 2, 1}), 3, nu);
    o.require(w2 == 3 && w3 == 21, "w(C) = " + w2.get_str() + " (s=2), " + w3.get_str() + " (s=3); expected 3 and 21");

    auto c = fixtures::thirteen_example();
    std::vector<int> weight(13, 1);
    auto io = intersection_order(c), po = peeling_order(c);
    for (int r : fixtures::thirteen_heavy_ranks) weight[io.sequence[r - 1]] = 2;
    int norm = 0;
    for (int x : weight) norm += x;
    auto alpha = [&](const ChordOrder& ord) {
        auto t = terminal_positions(c, ord);
        Poly out(1);
        for (std::size_t j = 1; j < t.size(); ++j) out *= a(weight[ord.sequence[t[j] - 1]], t[j] - t[j - 1]);
        return out;
    };
    Poly want = a(1, 1) * a(1, 1) * a(1, 1) * a(1, 2) * a(2, 1) * a(2, 2);
    o.require(c.size() == 13 && norm == 16, "|C| or ||C||");
    o.require(terminal_positions(c, io).front() == 5 && terminal_positions(c, po).front() == 5, "b(C)");
    o.require(alpha(io) == want && alpha(po) == want, "alpha(C) = " + alpha(io).str() + " / " + alpha(po).str());
    if (o.pass) o.note = "all example values reproduce";
    return o;
}

Outcome dse() {
    Outcome o;
    auto simple = dse_verify_simple(4, 5, false);
    auto bk = dse_verify_simple(5, 6, true);
    o.require(simple.ok(), "symbolic f through x^4");
    o.require(bk.ok(), "f_i = 1 through x^5");
    for (int s : {1, 2, 3}) o.require(dse_verify_general({s, 3, 4, 0}).ok(), "general s=" + std::to_string(s));
    if (o.pass) o.note = "simple (x^4 symbolic, x^5 with f_i = 1, first terms exact) and general s=1,2,3 through x^3";
    return o;
}

Outcome refined_identity() {
    Outcome o;
    Budget b = default_budget();
    b.allow_large = true; // i <= 5 needs weighted diagrams of norm 6
    long strata = 0;
    for (auto k : {IndexKind::IntersectionNu, IndexKind::IntersectionOmega, IndexKind::PeelingOmega}) {
        auto r = crazy_formula_check(2, 5, k, b);
        strata += r.checked;
        o.require(r.ok(), std::string("diagram form with ") + index_name(k));
    }
    auto rc = map_identity_check({2, 4, 4, 0}, 4, true);
    auto dec = map_identity_check({2, 4, 4, 0}, 4, false);
    auto comb = map_combination_check(5);
    o.require(comb.ok(), "map combine/split round trip");
    o.require(rc.ok(), "map form with the root weight kept on M2");
    std::string fail_at;
    for (auto& d : dec.details) fail_at += (fail_at.empty() ? "" : ", ") + d.substr(0, d.find(':'));
    o.require(dec.ok(), "map form with dec_{d2,i}(x) fails at " + fail_at + " (holds when a_{d(root M2), d2-i} stays with w(M2))");
    if (o.pass) o.note = std::to_string(strata) + " strata, map form d<=4, combine/split n<=5";
    return o;
}

Outcome ab_equations() {
    Outcome o;
    suite_into(o, "ab", 6);
    if (o.pass) o.note = "refined identities through z^6, displayed series through z^3, round trip n<=6";
    return o;
}

Outcome symmetry() {
    Outcome o;
    suite_into(o, "symmetry", 7);
    if (o.pass) o.note = "(terminal, top) matrix symmetric for n<=7";
    return o;
}

Outcome lambda() {
    Outcome o;
    auto r = lambda_count_check(6);
    o.require(r.ok(), r.details.empty() ? "mismatch" : r.details.front());
    if (o.pass) o.note = "[z^(n-1)]C(z,1,1) = 1,1,4,27,248,2830";
    return o;
}

Outcome suite_only(const std::string& suite, int n, const std::string& note) {
    Outcome o;
    suite_into(o, suite, n);
    if (o.pass) o.note = note;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string item;
            while (std::getline(ss, item, ',')) expected.insert(std::stoi(item));
        } else {
            std::cerr << "usage: acceptance [--expect-fail 9,11]\n";
            return 2;
        }
    }
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"counting: connected diagrams and bridgeless maps", counting_connected},
        {"counting: indecomposable diagrams and all maps", counting_all},
        {"bijection: theta and phi with inverses, phi = theta-bar",
         [] { return suite_only("bijection", 6, "maps n<=6, diagrams n<=7"); }},
        {"commutation rules", [] { return suite_only("commutation", 4, "bases n<=4, inserts n<=2, diagrams and maps"); }},
        {"planarity: forbidden pattern and blocked intervals",
         [] { return suite_only("planarity", 6, "all closed maps n<=6"); }},
        {"statistic transfer", transfer},
        {"nu/omega equidistribution", nu_omega},
        {"order invariance of G", order_invariance},
        {"qft example values", qft_values},
        {"Dyson-Schwinger equations", dse},
        {"refined identity, diagram and map forms", refined_identity},
        {"top-chord functional equations", ab_equations},
        {"top/terminal symmetry", symmetry},
        {"lambda corollary", lambda},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("error: ") + e.what()};
        }
        if (!out.pass) failed.insert(id);
        std::cout << (out.pass ? "PASS" : "FAIL") << "  " << (id < 10 ? " " : "") << id << "  " << criteria[i].first
                  << "  [" << out.note << "]" << std::endl;
    }
    std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass" << std::endl;
    if (!expected.empty()) {
        bool match = failed == expected;
        std::cout << (match ? "failures match the expected list" : "failures differ from the expected list") << std::endl;
        return match ? 0 : 1;
    }
    return failed.empty() ? 0 : 1;
}
