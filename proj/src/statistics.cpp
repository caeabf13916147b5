#include "chordatlas/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chordatlas/bijection.hpp"
#include "chordatlas/enumerate.hpp"
#include "chordatlas/error.hpp"

namespace chordatlas {

const char* order_name(OrderKind k) {
    switch (k) {
    case OrderKind::Intersection: return "intersection";
    case OrderKind::Peeling: return "peeling";
    case OrderKind::FirstEndpoint: return "first-endpoint";
    }
    return "?";
}

OrderKind parse_order(const std::string& s) {
    if (s == "intersection") return OrderKind::Intersection;
    if (s == "peeling") return OrderKind::Peeling;
    if (s == "first-endpoint") return OrderKind::FirstEndpoint;
    fail(ErrorCode::Parse, "unknown chord order '" + s + "'");
}

namespace {

using Chords = std::vector<std::pair<int, int>>;

ChordOrder from_sequence(OrderKind k, std::vector<int> seq) {
    ChordOrder o{k, std::vector<int>(seq.size()), std::move(seq)};
    for (std::size_t r = 0; r < o.sequence.size(); ++r) o.rank[o.sequence[r]] = static_cast<int>(r) + 1;
    return o;
}

// ids sorted by left endpoint, forming a connected set
void intersection_rec(const Chords& ch, const std::vector<int>& ids, std::vector<int>& out) {
    out.push_back(ids[0]);
    std::vector<int> rest(ids.begin() + 1, ids.end());
    std::vector<int> comp(rest.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < rest.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < rest.size(); ++b)
                if (comp[b] < 0 && crosses(ch[rest[a]], ch[rest[b]])) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }
    // components are numbered by their first chord, which is their first vertex
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> part;
        for (std::size_t s = 0; s < rest.size(); ++s)
            if (comp[s] == c) part.push_back(rest[s]);
        intersection_rec(ch, part, out);
    }
}

// ids sorted by left endpoint, forming an indecomposable block
void peeling_rec(const Chords& ch, const std::vector<int>& ids, std::vector<int>& out) {
    out.push_back(ids[0]);
    std::vector<std::pair<int, int>> pts; // (point, chord)
    for (std::size_t j = 1; j < ids.size(); ++j) {
        pts.emplace_back(ch[ids[j]].first, ids[j]);
        pts.emplace_back(ch[ids[j]].second, ids[j]);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<int>> blocks(1);
    int reach = -1;
    for (auto [p, c] : pts) {
        if (ch[c].first == p) blocks.back().push_back(c);
        reach = std::max(reach, ch[c].second);
        if (p == reach) blocks.emplace_back();
    }
    blocks.pop_back();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        std::sort(it->begin(), it->end());
        peeling_rec(ch, *it, out);
    }
}

} // namespace

ChordOrder intersection_order(const Diagram& c) {
    if (!is_connected(c)) fail(ErrorCode::NotConnected, "intersection order needs a connected diagram");
    std::vector<int> ids(c.size()), seq;
    std::iota(ids.begin(), ids.end(), 0);
    intersection_rec(c.chords(), ids, seq);
    return from_sequence(OrderKind::Intersection, std::move(seq));
}

ChordOrder peeling_order(const Diagram& d) {
    if (!is_indecomposable(d)) fail(ErrorCode::NotIndecomposable, "peeling order needs an indecomposable diagram");
    std::vector<int> ids(d.size()), seq;
    std::iota(ids.begin(), ids.end(), 0);
    peeling_rec(d.chords(), ids, seq);
    return from_sequence(OrderKind::Peeling, std::move(seq));
}

ChordOrder first_endpoint_order(const Diagram& d) {
    std::vector<int> seq(d.size());
    std::iota(seq.begin(), seq.end(), 0);
    return from_sequence(OrderKind::FirstEndpoint, std::move(seq));
}

ChordOrder make_order(const Diagram& d, OrderKind k) {
    switch (k) {
    case OrderKind::Intersection: return intersection_order(d);
    case OrderKind::Peeling: return peeling_order(d);
    case OrderKind::FirstEndpoint: break;
    }
    return first_endpoint_order(d);
}

std::vector<int> terminal_chords(const Diagram& d) {
    auto ch = d.chords();
    std::vector<int> out;
    for (int c = 0; c < d.size(); ++c) {
        bool term = true;
        for (int e = c + 1; e < d.size() && term; ++e) term = !crosses(ch[c], ch[e]);
        if (term) out.push_back(c);
    }
    return out;
}

std::vector<int> terminal_positions(const Diagram& d, const ChordOrder& o) {
    std::vector<int> out;
    for (int c : terminal_chords(d)) out.push_back(o.rank[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> top_chords(const Diagram& d) {
    auto ch = d.chords();
    std::vector<int> out;
    for (int c = 0; c < d.size(); ++c) {
        bool top = true;
        for (int e = 0; e < c && top; ++e) top = !(ch[e].second > ch[c].second);
        if (top) out.push_back(c);
    }
    return out;
}

std::vector<int> TauTree::preorder() const {
    std::vector<int> out, stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        if (nodes[v].right >= 0) stack.push_back(nodes[v].right);
        if (nodes[v].left >= 0) stack.push_back(nodes[v].left);
    }
    return out;
}

int TauTree::leaf_count() const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const Node& x) { return x.label > 0; }));
}

TauTree tau_tree(const Diagram& c) {
    if (!is_connected(c)) fail(ErrorCode::NotConnected, "tau needs a connected diagram");
    TauTree t;
    if (c.size() == 1) {
        t.nodes.push_back({-1, -1, -1, 1});
        return t;
    }
    auto f = varbox_factorize(c);
    TauTree t1 = tau_tree(f.c1), t2 = tau_tree(f.c2);
    int n2 = f.c2.size();
    int off = static_cast<int>(t2.nodes.size());
    t.nodes = t2.nodes;
    for (auto& x : t.nodes)
        if (x.label) x.label += 1;
    for (auto x : t1.nodes) {
        for (int* p : {&x.left, &x.right, &x.parent})
            if (*p >= 0) *p += off;
        if (x.label > 1) x.label += n2;
        t.nodes.push_back(x);
    }
    int v = t2.preorder()[f.i - 1];
    int w = static_cast<int>(t.nodes.size());
    int par = t.nodes[v].parent;
    t.nodes.push_back({t1.root + off, v, par, 0});
    t.nodes[t1.root + off].parent = w;
    t.nodes[v].parent = w;
    if (par < 0) {
        t.root = w;
    } else {
        (t.nodes[par].left == v ? t.nodes[par].left : t.nodes[par].right) = w;
    }
    if (t2.root != v) t.root = t2.root;
    return t;
}

std::vector<int> nu_vector(const Diagram& c) {
    auto t = tau_tree(c);
    std::vector<int> nu(c.size(), 0);
    for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
        if (!t.nodes[v].label) continue;
        int steps = 0;
        for (int x = v; t.nodes[x].parent >= 0 && t.nodes[t.nodes[x].parent].right == x; x = t.nodes[x].parent) ++steps;
        nu[t.nodes[v].label - 1] = steps;
    }
    return nu;
}

std::vector<int> omega_vector(const Diagram& d, const ChordOrder& o) {
    auto ch = d.chords();
    std::vector<int> mark(d.intervals() + 1, -1);
    for (int r = 0; r < d.size(); ++r) {
        auto [a, b] = ch[o.sequence[r]];
        for (int j = a + 1; j <= b; ++j) mark[j] = r;
    }
    std::vector<int> omega(d.size(), -1);
    for (int j = 1; j <= d.intervals(); ++j)
        if (mark[j] >= 0) ++omega[mark[j]];
    return omega;
}

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace

Report nu_omega_equidistribution_check(int n) {
    Report r{"nu-omega", n, 0, 0, {}};
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, long> a, b;
    for (auto& c : enumerate_diagrams(n, DiagramClass::Connected)) {
        auto o = intersection_order(c);
        auto s = terminal_positions(c, o);
        ++a[{s, nu_vector(c)}];
        ++b[{s, omega_vector(c, o)}];
        ++r.checked;
    }
    std::map<Key, std::pair<long, long>> all;
    for (auto& [k, v] : a) all[k].first = v;
    for (auto& [k, v] : b) all[k].second = v;
    for (auto& [k, v] : all) {
        if (v.first == v.second) continue;
        ++r.violations;
        if (r.details.size() < 10)
            r.details.push_back("S=" + vec_str(k.first) + " v=" + vec_str(k.second) + ": nu " + std::to_string(v.first) +
                                " vs omega " + std::to_string(v.second));
    }
    r.details.push_back(std::to_string(all.size()) + " classes");
    return r;
}

StatProfile stat_profile_diagram(const Diagram& d) {
    StatProfile p;
    p.n = d.size();
    auto o = peeling_order(d);
    p.terminals = terminal_positions(d, o);
    p.b = p.terminals.front();
    int prev = 0;
    for (int t : p.terminals) {
        p.gaps.push_back(t - prev);
        prev = t;
    }
    p.omega = omega_vector(d, o);
    p.top_count = static_cast<int>(top_chords(d).size());
    if (is_connected(d)) p.nu = nu_vector(d);
    p.crossings = crossings(d);
    return p;
}

StatProfile stat_profile_map(const CombMap& m) {
    StatProfile p;
    p.n = m.size();
    auto deg = in_degrees_by_visit(m);
    p.gaps = deg;
    int acc = 0;
    for (int g : deg) p.terminals.push_back(acc += g);
    p.b = deg.front();
    auto lab = dfs_labeling(m);
    p.omega.assign(p.n, -1);
    for (int l : lab) ++p.omega[l - 1];
    p.vertices = m.vertex_count();
    p.rid = deg.front();
    p.in_degrees = deg;
    p.genus = genus(m);
    return p;
}

bool transfer_matches(const StatProfile& d, const StatProfile& m) {
    return d.n == m.n && d.terminals == m.terminals && d.b == m.b && d.gaps == m.gaps && d.omega == m.omega;
}

Report transfer_check(int n) {
    Report r{"transfer", n, 0, 0, {}};
    for (auto& m : enumerate_maps(n, MapClass::All)) {
        ++r.checked;
        auto pd = stat_profile_diagram(phi(m));
        auto pm = stat_profile_map(m);
        if (transfer_matches(pd, pm)) continue;
        ++r.violations;
        if (r.details.size() < 10)
            r.details.push_back("gaps " + vec_str(pd.gaps) + " vs " + vec_str(pm.gaps) + ", omega " + vec_str(pd.omega) +
                                " vs " + vec_str(pm.omega));
    }
    return r;
}

std::map<std::pair<int, int>, long> top_terminal_distribution(int n) {
    std::map<std::pair<int, int>, long> out;
    for (auto& d : enumerate_diagrams(n, DiagramClass::Indecomposable))
        ++out[{static_cast<int>(terminal_chords(d).size()), static_cast<int>(top_chords(d).size())}];
    return out;
}

Report top_terminal_symmetry_check(int n) {
    Report r{"symmetry", n, 0, 0, {}};
    auto dist = top_terminal_distribution(n);
    for (auto& [k, v] : dist) {
        r.checked += v;
        auto it = dist.find({k.second, k.first});
        long w = it == dist.end() ? 0 : it->second;
        if (w != v) {
            ++r.violations;
            r.details.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")=" + std::to_string(v) +
                                " but transpose " + std::to_string(w));
        }
    }
    return r;
}

} // namespace chordatlas
