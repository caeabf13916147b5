#include "chordatlas/bijection.hpp"

#include <algorithm>

#include "chordatlas/error.hpp"

namespace chordatlas {

bool is_bridge(const CombMap& m, int h) {
    if (m.dangling(h)) return false;
    auto b = bridges(m);
    int lo = std::min(h, m.alpha(h));
    return std::find(b.begin(), b.end(), lo) != b.end();
}

Diagram theta(const CombMap& m) {
    if (!is_bridgeless(m)) fail(ErrorCode::NotBridgeless, "theta is defined on bridgeless maps");
    if (m.size() == 1) return Diagram::one_chord();
    auto f = map_star_factorize(m);
    return star_product(theta(f.m1), theta(f.m2), f.i);
}

CombMap theta_inv(const Diagram& c) {
    if (!is_connected(c)) fail(ErrorCode::NotConnected, "theta inverse is defined on connected diagrams");
    if (c.size() == 1) return CombMap::trivial();
    auto f = star_factorize(c);
    return map_star_product(theta_inv(f.c1), theta_inv(f.c2), f.i);
}

Diagram phi(const CombMap& m) {
    if (!m.closed()) fail(ErrorCode::Internal, "phi is defined on closed maps");
    if (m.size() == 1) return Diagram::one_chord();
    int p = m.sigma(m.root());
    if (is_bridge(m, p)) {
        auto cut = cut_bridge(m, p);
        return insert_diagram(phi(cut.near), phi(cut.far), 1);
    }
    auto [rest, k] = remove_root_edge(m);
    return insert_root_chord(phi(rest), k);
}

CombMap phi_inv(const Diagram& d) {
    if (!is_indecomposable(d)) fail(ErrorCode::NotIndecomposable, "phi inverse is defined on indecomposable diagrams");
    if (d.size() == 1) return CombMap::trivial();
    auto [rest, k] = remove_root_chord(d);
    if (k <= rest.intervals() && is_indecomposable(rest)) return insert_root_edge(phi_inv(rest), k);
    // D = D_{D1,1}(D2) with D1 the first indecomposable block after the root's left end
    int reach = 1, end = 1;
    for (int j = 1;; ++j) {
        reach = std::max(reach, d.partner(j));
        if (reach == j) {
            end = j;
            break;
        }
    }
    auto cp = d.chord_of_point();
    std::vector<int> inner, outer;
    for (int i = 0; i < d.points(); ++i) {
        if (d.partner(i) < i) continue;
        (i >= 1 && i <= end ? inner : outer).push_back(cp[i]);
    }
    return insert_map_bridge(phi_inv(restrict_chords(d, outer)), phi_inv(restrict_chords(d, inner)), 1);
}

RootDecomposition<Diagram> decompose_diagram(const Diagram& d) {
    if (!is_indecomposable(d)) fail(ErrorCode::NotIndecomposable, "decomposition needs an indecomposable diagram");
    auto ch = d.chords();
    int n = d.size();
    std::vector<char> in_core(n, 0);
    in_core[0] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < n; ++a)
            if (in_core[a])
                for (int b = 0; b < n; ++b)
                    if (!in_core[b] && crosses(ch[a], ch[b])) in_core[b] = grew = 1;
    }
    auto cp = d.chord_of_point();
    std::vector<int> core;
    for (int c = 0; c < n; ++c)
        if (in_core[c]) core.push_back(c);
    RootDecomposition<Diagram> out{restrict_chords(d, core), {}};
    int interval = 0;
    std::vector<int> piece;
    int piece_start = -1, reach = -1;
    for (int p = 0; p < d.points(); ++p) {
        if (in_core[cp[p]]) {
            ++interval;
            continue;
        }
        if (piece.empty()) piece_start = p, reach = p;
        (void)piece_start;
        if (d.partner(p) > p) piece.push_back(cp[p]);
        reach = std::max(reach, d.partner(p));
        if (reach == p) {
            out.grafts.emplace_back(restrict_chords(d, piece), interval);
            piece.clear();
        }
    }
    return out;
}

Diagram recompose(const RootDecomposition<Diagram>& r) {
    Diagram d = r.core;
    for (auto it = r.grafts.rbegin(); it != r.grafts.rend(); ++it) d = insert_diagram(d, it->first, it->second);
    return d;
}

RootDecomposition<CombMap> decompose_map(const CombMap& m) {
    if (!m.closed()) fail(ErrorCode::Internal, "decomposition needs a closed map");
    auto vert = m.vertex_of();
    auto br = bridges(m);
    std::vector<char> is_br(m.half_edges(), 0);
    for (int h : br) is_br[h] = is_br[m.alpha(h)] = 1;
    // vertices of the bridgeless component of the root
    std::vector<char> core_v(m.vertex_count(), 0);
    core_v[vert[m.root()]] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (int h = 0; h < m.half_edges(); ++h)
            if (core_v[vert[h]] && !is_br[h] && !m.dangling(h) && !core_v[vert[m.alpha(h)]])
                core_v[vert[m.alpha(h)]] = grew = 1;
    }
    std::vector<char> keep(m.half_edges(), 0);
    for (int h = 0; h < m.half_edges(); ++h) keep[h] = core_v[vert[h]] && !is_br[h];
    std::vector<int> idx;
    RootDecomposition<CombMap> out{restrict_map(m, keep, m.root(), &idx), {}};
    auto lab = bridge_first_labeling(out.core);
    struct G {
        int label, order;
        CombMap map;
    };
    std::vector<G> grafts;
    for (int h = 0; h < m.half_edges(); ++h) {
        if (!keep[h]) continue;
        int order = 0;
        for (int g = m.sigma(h); !keep[g]; g = m.sigma(g)) {
            grafts.push_back({lab[idx[h]], order++, cut_bridge(m, g).far});
        }
    }
    std::sort(grafts.begin(), grafts.end(),
              [](const G& a, const G& b) { return a.label != b.label ? a.label < b.label : a.order < b.order; });
    for (auto& g : grafts) out.grafts.emplace_back(g.map, g.label);
    return out;
}

CombMap recompose(const RootDecomposition<CombMap>& r) {
    CombMap m = r.core;
    for (auto it = r.grafts.rbegin(); it != r.grafts.rend(); ++it) m = insert_map_bridge(m, it->first, it->second);
    return m;
}

Diagram theta_bar(const CombMap& m) {
    auto dec = decompose_map(m);
    RootDecomposition<Diagram> dd{theta(dec.core), {}};
    for (auto& [g, k] : dec.grafts) dd.grafts.emplace_back(theta_bar(g), k);
    return recompose(dd);
}

namespace {

// For each chord s: members of the component of s among chords whose left end is >= left(s).
std::vector<std::vector<char>> late_components(const std::vector<std::pair<int, int>>& ch) {
    int n = static_cast<int>(ch.size());
    std::vector<std::vector<char>> out(n, std::vector<char>(n, 0));
    for (int s = 0; s < n; ++s) {
        auto& comp = out[s];
        comp[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = s + 1; b < n; ++b)
                if (!comp[b] && crosses(ch[a], ch[b])) {
                    comp[b] = 1;
                    stack.push_back(b);
                }
        }
    }
    return out;
}

bool under(std::pair<int, int> c, int x) { return c.first < x && x < c.second; }

} // namespace

bool has_forbidden_pattern(const Diagram& d) {
    if (!is_indecomposable(d)) fail(ErrorCode::NotIndecomposable, "pattern test needs an indecomposable diagram");
    auto ch = d.chords();
    int n = d.size();
    auto comp = late_components(ch);
    for (int r = 0; r < n; ++r) {
        int x = ch[r].second;
        for (int s = r + 1; s < n; ++s) {
            if (!under(ch[s], x)) continue;
            for (int t = s + 1; t < n; ++t)
                if (comp[s][t] && under(ch[t], x)) return true;
        }
    }
    return false;
}

bool has_chain_pattern(const Diagram& d) {
    auto ch = d.chords();
    int n = d.size();
    auto lr = [&](int a, int b) { // a crosses b from the left
        return ch[a].first < ch[b].first && ch[b].first < ch[a].second && ch[a].second < ch[b].second;
    };
    // minimal chains are induced paths; search them by DFS from each s
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
            if (!lr(r, s)) continue;
            std::vector<int> chain{s};
            auto dfs = [&](auto&& self) -> bool {
                int last = chain.back();
                for (int nx = last + 1; nx < n; ++nx) {
                    if (!lr(last, nx)) continue;
                    bool induced = true;
                    for (std::size_t j = 0; j + 1 < chain.size() && induced; ++j) induced = !crosses(ch[chain[j]], ch[nx]);
                    if (!induced) continue;
                    chain.push_back(nx);
                    bool inner_free = true;
                    for (std::size_t j = 1; j + 1 < chain.size() && inner_free; ++j) inner_free = !crosses(ch[r], ch[chain[j]]);
                    if (inner_free && lr(r, nx)) return true;
                    if (self(self)) return true;
                    chain.pop_back();
                }
                return false;
            };
            if (dfs(dfs)) return true;
        }
    return false;
}

std::vector<int> blocked_intervals(const Diagram& d) {
    auto ch = d.chords();
    int n = d.size();
    auto comp = late_components(ch);
    std::vector<int> out;
    for (int j = 1; j <= d.intervals(); ++j) {
        // interval j lies between points j-1 and j
        auto covers = [&](int c) { return ch[c].first <= j - 1 && j <= ch[c].second; };
        bool blocked = false;
        for (int s = 0; s < n && !blocked; ++s) {
            if (!covers(s)) continue;
            for (int t = s + 1; t < n && !blocked; ++t) blocked = comp[s][t] && covers(t);
        }
        if (blocked) out.push_back(j);
    }
    return out;
}

} // namespace chordatlas
