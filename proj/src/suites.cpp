#include "chordatlas/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <thread>

#include "chordatlas/bijection.hpp"
#include "chordatlas/error.hpp"
#include "chordatlas/genfun.hpp"
#include "chordatlas/io.hpp"
#include "chordatlas/qft.hpp"
#include "chordatlas/statistics.hpp"
#include "json.hpp"

namespace chordatlas {

bool SuiteReport::ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const Report& r) { return r.ok(); });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"counts",   "commutation", "bijection", "planarity", "transfer",
                                                "nu-omega", "symmetry",    "ab",        "qft"};
    return names;
}

namespace {

using Property = std::function<Report()>;

// Records the first failures; sweeps run by increasing size, so the first one is minimal.
struct Tally {
    Report r;
    Tally(std::string name, int n) : r{std::move(name), n, 0, 0, {}} {}
    void check(bool ok, const std::function<std::string()>& witness) {
        ++r.checked;
        if (ok) return;
        ++r.violations;
        if (r.details.size() < 5) r.details.push_back(witness());
    }
};

bool same(const CombMap& a, const CombMap& b) { return canonical_code(a) == canonical_code(b); }

// Sweeps per size merged into one report.
Report merged(const std::string& name, int lo, int nmax, const std::function<Report(int)>& one) {
    Report r{name, nmax, 0, 0, {}};
    for (int n = lo; n <= nmax; ++n) {
        Report s = one(n);
        r.checked += s.checked;
        r.violations += s.violations;
        for (auto& d : s.details) r.details.push_back("n=" + std::to_string(n) + ": " + d);
    }
    return r;
}

int map_limit(int nmax, const Budget& b, Report* note = nullptr) {
    int lim = b.allow_large ? nmax : std::min(nmax, b.maps);
    if (note && lim < nmax) note->details.push_back("maps limited to n=" + std::to_string(lim) + " by the budget");
    return lim;
}

std::vector<Property> counts_suite(int nmax, const SuiteOptions& o) {
    const Budget& b = o.budget;
    auto count = [nmax, &b](std::string name, bool maps, bool restricted) -> Property {
        return [=, &b] {
            Tally t(name, nmax);
            auto seq = restricted ? c_seq(nmax) : b_seq(nmax);
            int lim = maps ? map_limit(nmax, b, &t.r) : nmax;
            for (int n = 1; n <= lim; ++n) {
                long got = maps ? static_cast<long>(enumerate_maps(n, restricted ? MapClass::Bridgeless : MapClass::All, b).size())
                                : static_cast<long>(enumerate_diagrams(n, restricted ? DiagramClass::Connected : DiagramClass::Indecomposable, b).size());
                t.check(got == seq[n - 1], [&] { return "n=" + std::to_string(n) + ": enumerated " + std::to_string(got) + ", recurrence " + seq[n - 1].get_str(); });
            }
            return t.r;
        };
    };
    return {count("connected-diagrams", false, true), count("indecomposable-diagrams", false, false),
            count("bridgeless-maps", true, true), count("all-maps", true, false)};
}

std::vector<Property> commutation_suite(int nmax, const SuiteOptions& o) {
    const Budget& b = o.budget;
    Property diagrams = [nmax, &b] {
        Tally t("diagram-commutation", nmax);
        for (int n = 1; n <= nmax; ++n)
            for (auto& base : enumerate_diagrams(n, DiagramClass::All, b))
                for (int m = 1; m <= 2; ++m)
                    for (auto& ins : enumerate_diagrams(m, DiagramClass::Indecomposable, b))
                        for (int k = 1; k <= base.intervals(); ++k)
                            for (int l = 1; l <= base.intervals() + 2; ++l) {
                                auto lhs = insert_diagram(insert_root_chord(base, k), ins, l);
                                auto witness = [&] { return diagram_to_text(base) + " with " + diagram_to_text(ins) + " k=" + std::to_string(k) + " l=" + std::to_string(l); };
                                if (k <= l - 2)
                                    t.check(lhs == insert_root_chord(insert_diagram(base, ins, l - 2), k), witness);
                                else if (l - 1 >= 1 && l - 1 <= k)
                                    t.check(lhs == insert_root_chord(insert_diagram(base, ins, l - 1), k + 2 * m), witness);
                            }
        return t.r;
    };
    Property maps = [nmax, &b] {
        Tally t("map-commutation", nmax);
        int lim = map_limit(nmax, b, &t.r);
        for (int n = 1; n <= lim; ++n)
            for (auto& base : enumerate_maps(n, MapClass::All, b))
                for (int s = 1; s <= 2; ++s)
                    for (auto& ins : enumerate_maps(s, MapClass::All, b))
                        for (int k = 1; k <= base.half_edges(); ++k)
                            for (int l = 1; l <= base.half_edges() + 2; ++l) {
                                auto lhs = insert_map_bridge(insert_root_edge(base, k), ins, l);
                                auto witness = [&] { return map_to_json(base) + " with " + map_to_json(ins) + " k=" + std::to_string(k) + " l=" + std::to_string(l); };
                                if (k <= l - 2)
                                    t.check(same(lhs, insert_root_edge(insert_map_bridge(base, ins, l - 2), k)), witness);
                                else if (l - 1 >= 1 && l - 1 <= k)
                                    t.check(same(lhs, insert_root_edge(insert_map_bridge(base, ins, l - 1), k + 2 * s)), witness);
                            }
        return t.r;
    };
    return {diagrams, maps};
}

// Uniform random perfect matching on 2n points.
Diagram random_diagram(int n, std::mt19937_64& rng) {
    std::vector<int> pts(2 * n);
    for (int i = 0; i < 2 * n; ++i) pts[i] = i;
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 2 * n; i += 2) pairs.emplace_back(std::min(pts[i], pts[i + 1]), std::max(pts[i], pts[i + 1]));
    return Diagram::from_pairs(pairs);
}

std::vector<Property> bijection_suite(int nmax, const SuiteOptions& o) {
    const Budget& b = o.budget;
    auto map_side = [nmax, &b](bool bridgeless) -> Property {
        return [=, &b] {
            Tally t(bridgeless ? "theta-on-bridgeless-maps" : "phi-on-maps", nmax);
            int lim = map_limit(nmax, b, &t.r);
            for (int n = 1; n <= lim; ++n) {
                auto maps = enumerate_maps(n, bridgeless ? MapClass::Bridgeless : MapClass::All, b);
                std::set<Diagram> seen;
                for (auto& m : maps) {
                    auto d = bridgeless ? theta(m) : phi(m);
                    bool cls = bridgeless ? is_connected(d) : is_indecomposable(d);
                    auto back = bridgeless ? theta_inv(d) : phi_inv(d);
                    t.check(d.size() == n && cls && same(back, m), [&] { return map_to_json(m); });
                    seen.insert(d);
                }
                auto all = enumerate_diagrams(n, bridgeless ? DiagramClass::Connected : DiagramClass::Indecomposable, b);
                t.check(seen.size() == all.size(), [&] { return "n=" + std::to_string(n) + ": image has " + std::to_string(seen.size()) + " of " + std::to_string(all.size()) + " diagrams"; });
            }
            return t.r;
        };
    };
    int dmax = std::min(nmax + 1, b.allow_large ? nmax + 1 : b.diagrams);
    auto diagram_side = [dmax, &b](bool connected) -> Property {
        return [=, &b] {
            Tally t(connected ? "theta-inverse-on-connected-diagrams" : "phi-inverse-on-indecomposable-diagrams", dmax);
            for (int n = 1; n <= dmax; ++n)
                for (auto& d : enumerate_diagrams(n, connected ? DiagramClass::Connected : DiagramClass::Indecomposable, b)) {
                    bool ok = connected ? theta(theta_inv(d)) == d : phi(phi_inv(d)) == d;
                    t.check(ok, [&] { return diagram_to_text(d); });
                }
            return t.r;
        };
    };
    Property theta_bar_eq = [nmax, &b] {
        Tally t("phi-equals-theta-bar", nmax);
        int lim = map_limit(nmax, b, &t.r);
        for (int n = 1; n <= lim; ++n)
            for (auto& m : enumerate_maps(n, MapClass::All, b)) {
                auto d = phi(m);
                t.check(d == theta_bar(m) && (!is_bridgeless(m) || d == theta(m)), [&] { return map_to_json(m); });
            }
        return t.r;
    };
    std::uint64_t seed = o.seed;
    Property random = [nmax, seed] {
        Tally t("phi-round-trip-random", nmax + 4);
        std::mt19937_64 rng(seed);
        for (int n = nmax + 2; n <= nmax + 4; ++n)
            for (int k = 0; k < 200; ++k) {
                auto d = random_diagram(n, rng);
                if (!is_indecomposable(d)) continue;
                t.check(phi(phi_inv(d)) == d, [&] { return diagram_to_text(d); });
            }
        t.r.details.push_back("seed " + std::to_string(seed));
        return t.r;
    };
    return {map_side(true), map_side(false), diagram_side(true), diagram_side(false), theta_bar_eq, random};
}

std::vector<Property> planarity_suite(int nmax, const SuiteOptions& o) {
    const Budget& b = o.budget;
    Property pattern = [nmax, &b] {
        Tally t("planar-iff-no-forbidden-pattern", nmax);
        int lim = map_limit(nmax, b, &t.r);
        for (int n = 1; n <= lim; ++n)
            for (auto& m : enumerate_maps(n, MapClass::All, b))
                t.check(is_planar(m) == !has_forbidden_pattern(phi(m)), [&] { return map_to_json(m); });
        return t.r;
    };
    Property blocked = [nmax, &b] {
        Tally t("blocked-intervals-are-internal-corners", nmax);
        int lim = map_limit(nmax, b, &t.r);
        for (int n = 1; n <= lim; ++n)
            for (auto& m : enumerate_maps(n, MapClass::Planar, b)) {
                auto lab = bridge_first_labeling(m);
                std::vector<int> want;
                for (int h : internal_corners(m)) want.push_back(lab[h]);
                std::sort(want.begin(), want.end());
                t.check(blocked_intervals(phi(m)) == want, [&] { return map_to_json(m); });
            }
        return t.r;
    };
    return {pattern, blocked};
}

std::vector<Property> qft_suite(int nmax, const SuiteOptions& o) {
    const Budget& b = o.budget;
    check_budget(b, "qft", nmax, b.qft);
    std::vector<Property> out;
    out.push_back([nmax, &b] {
        Report r{"order-invariance", nmax, 0, 0, {}};
        for (int s : {1, 2, 3}) {
            QftConfig cfg{s, nmax, nmax, 0};
            Poly nu = G_series_diagrams(cfg, IndexKind::IntersectionNu, a_symbol, b);
            std::vector<std::pair<std::string, Poly>> others{
                {"omega-inter", G_series_diagrams(cfg, IndexKind::IntersectionOmega, a_symbol, b)},
                {"omega-peel", G_series_diagrams(cfg, IndexKind::PeelingOmega, a_symbol, b)},
                {"maps", G_series_maps(cfg, a_symbol, b)}};
            for (auto& [name, g] : others) {
                ++r.checked;
                if (g == nu) continue;
                ++r.violations;
                r.details.push_back("s=" + std::to_string(s) + ": " + name + " differs from nu");
            }
        }
        return r;
    });
    out.push_back([nmax, &b] {
        Report r = dse_verify_simple(std::min(nmax, 4), nmax + 1, false, b);
        Report ones = dse_verify_simple(nmax, nmax + 1, true, b);
        r.name = "dse-simple";
        r.checked += ones.checked;
        r.violations += ones.violations;
        for (auto& d : ones.details) r.details.push_back("f_i = 1: " + d);
        return r;
    });
    out.push_back([nmax, &b] {
        return merged("dse-general", 1, 3, [&](int s) { return dse_verify_general({s, std::min(nmax, 3), nmax + 1, 0}, a_symbol, b); });
    });
    for (auto k : {IndexKind::IntersectionNu, IndexKind::IntersectionOmega, IndexKind::PeelingOmega})
        out.push_back([nmax, k, &b] {
            Report r = crazy_formula_check(2, nmax - 1, k, b);
            r.name = std::string("refined-identity-") + index_name(k);
            return r;
        });
    out.push_back([nmax, &b] {
        Report r = map_combination_check(std::min(nmax, 5), b);
        r.name = "map-combine-split";
        return r;
    });
    int xm = std::min(nmax, 4);
    out.push_back([xm, &b] {
        Report r = map_identity_check({2, xm, xm, 0}, 4, true, b);
        r.name = "map-identity-root-coupled";
        return r;
    });
    out.push_back([xm, &b] {
        Report r = map_identity_check({2, xm, xm, 0}, 4, false, b);
        r.name = "map-identity-dec";
        return r;
    });
    return out;
}

std::vector<Property> properties_for(const std::string& suite, int nmax, const SuiteOptions& o) {
    const Budget& b = o.budget;
    if (suite == "counts") return counts_suite(nmax, o);
    if (suite == "commutation") return commutation_suite(nmax, o);
    if (suite == "bijection") return bijection_suite(nmax, o);
    if (suite == "planarity") return planarity_suite(nmax, o);
    if (suite == "transfer") {
        check_budget(b, "maps", nmax, b.maps);
        return {[nmax] { return merged("transfer", 1, nmax, transfer_check); }};
    }
    if (suite == "nu-omega") {
        check_budget(b, "diagrams", nmax, b.diagrams);
        return {[nmax] { return merged("nu-omega-equidistribution", 1, nmax, nu_omega_equidistribution_check); }};
    }
    if (suite == "symmetry") {
        check_budget(b, "diagrams", nmax, b.diagrams);
        return {[nmax] { return merged("top-terminal-symmetry", 1, nmax, top_terminal_symmetry_check); }};
    }
    if (suite == "ab")
        return {[nmax, &b] { return verify_ab(nmax, b); },
                [nmax, &b] {
                    Tally t("ab-round-trip", nmax);
                    for (int n = 2; n <= nmax; ++n)
                        for (auto& d : enumerate_diagrams(n, DiagramClass::Indecomposable, b)) {
                            auto [md, d2] = ab_factorize(d);
                            t.check(ab_combine(md, d2) == d, [&] { return diagram_to_text(d); });
                        }
                    return t.r;
                },
                [nmax, &b] { return lambda_count_check(nmax, b); }};
    if (suite == "qft") return qft_suite(nmax, o);
    fail(ErrorCode::UnknownSuite, "'" + suite + "'");
}

} // namespace

SuiteReport run_suite(const std::string& suite, int nmax, const SuiteOptions& opt) {
    if (nmax < 1) fail(ErrorCode::BudgetExceeded, "size bound must be positive");
    auto start = std::chrono::steady_clock::now();
    auto props = properties_for(suite, nmax, opt);
    SuiteReport out{suite, nmax, {}, 0};
    unsigned threads = opt.threads > 0 ? static_cast<unsigned>(opt.threads) : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1) {
        for (auto& p : props) out.properties.push_back(p());
    } else {
        // properties in waves of at most `threads` workers
        for (std::size_t i = 0; i < props.size(); i += threads) {
            std::vector<std::future<Report>> wave;
            for (std::size_t j = i; j < std::min(props.size(), i + threads); ++j)
                wave.push_back(std::async(std::launch::async, props[j]));
            for (auto& f : wave) out.properties.push_back(f.get());
        }
    }
    std::sort(out.properties.begin(), out.properties.end(), [](const Report& a, const Report& b) { return a.name < b.name; });
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::string suite_report_to_json(const SuiteReport& r) {
    using nlohmann::json;
    json props = json::array();
    for (auto& p : r.properties) props.push_back(json::parse(report_to_json(p)));
    return json{{"suite", r.suite}, {"nmax", r.nmax}, {"ok", r.ok()}, {"properties", props}, {"seconds", r.seconds}}.dump();
}

} // namespace chordatlas
