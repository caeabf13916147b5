#include "chordatlas/enumerate.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#include "chordatlas/error.hpp"

namespace chordatlas {

DiagramClass parse_diagram_class(const std::string& s) {
    if (s == "all") return DiagramClass::All;
    if (s == "connected") return DiagramClass::Connected;
    if (s == "indecomposable") return DiagramClass::Indecomposable;
    fail(ErrorCode::Parse, "unknown diagram class '" + s + "'");
}

MapClass parse_map_class(const std::string& s) {
    if (s == "all") return MapClass::All;
    if (s == "bridgeless") return MapClass::Bridgeless;
    if (s == "planar") return MapClass::Planar;
    fail(ErrorCode::Parse, "unknown map class '" + s + "'");
}

Budget default_budget() {
    Budget b;
    const char* env = std::getenv("CHORD_ATLAS_BUDGET");
    if (!env) return b;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        auto key = item.substr(0, eq);
        int val = std::atoi(item.c_str() + eq + 1);
        if (key == "diagrams") b.diagrams = val;
        else if (key == "maps") b.maps = val;
        else if (key == "qft") b.qft = val;
    }
    return b;
}

void check_budget(const Budget& b, const char* what, int requested, int limit) {
    if (requested > limit && !b.allow_large)
        fail(ErrorCode::BudgetExceeded, std::string(what) + " size " + std::to_string(requested) + " exceeds budget " +
                                            std::to_string(limit) + " (pass --allow-large to override)");
}

bool in_class(const Diagram& d, DiagramClass c) {
    switch (c) {
    case DiagramClass::All: return true;
    case DiagramClass::Connected: return is_connected(d);
    case DiagramClass::Indecomposable: return is_indecomposable(d);
    }
    return false;
}

std::vector<Diagram> enumerate_diagrams(int n, DiagramClass c, const Budget& b) {
    if (n < 1) fail(ErrorCode::GapInSupport, "diagram size must be positive");
    check_budget(b, "diagram", n, b.diagrams);
    std::vector<Diagram> out;
    for_each_matching(n, [&](const std::vector<int>& p) {
        auto d = Diagram::from_pairing(p);
        if (in_class(d, c)) out.push_back(std::move(d));
    });
    return out;
}

namespace {

std::mutex cache_mutex;
std::vector<std::vector<CombMap>> map_cache{{}, {CombMap::trivial()}};

// Two exclusive constructions: a non-bridge root edge (R_k) or a root edge that is a bridge.
const std::vector<CombMap>& maps_of_size(int n) {
    while (static_cast<int>(map_cache.size()) <= n) {
        int s = static_cast<int>(map_cache.size());
        std::map<std::vector<int>, CombMap> found;
        for (auto& m : map_cache[s - 1])
            for (int k = 1; k <= m.half_edges(); ++k) {
                auto c = canonical_form(insert_root_edge(m, k)).map;
                found.emplace(canonical_code(c), c);
            }
        for (int j = 1; j < s; ++j)
            for (auto& up : map_cache[s - j])
                for (auto& down : map_cache[j]) {
                    auto c = canonical_form(insert_map_bridge(up, down, 1)).map;
                    found.emplace(canonical_code(c), c);
                }
        std::vector<CombMap> level;
        level.reserve(found.size());
        for (auto& [code, m] : found) level.push_back(m);
        map_cache.push_back(std::move(level));
    }
    return map_cache[n];
}

} // namespace

std::vector<CombMap> enumerate_maps(int n, MapClass c, const Budget& b) {
    if (n < 1) fail(ErrorCode::GapInSupport, "map size must be positive");
    check_budget(b, "map", n, b.maps);
    std::vector<CombMap> all;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        all = maps_of_size(n);
    }
    if (c == MapClass::All) return all;
    std::vector<CombMap> out;
    for (auto& m : all)
        if ((c == MapClass::Bridgeless && is_bridgeless(m)) || (c == MapClass::Planar && is_planar(m))) out.push_back(m);
    return out;
}

} // namespace chordatlas
