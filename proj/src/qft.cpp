#include "chordatlas/qft.hpp"

#include <algorithm>
#include <set>

#include "chordatlas/error.hpp"
#include "chordatlas/statistics.hpp"

namespace chordatlas {

const char* index_name(IndexKind k) {
    switch (k) {
    case IndexKind::IntersectionNu: return "nu";
    case IndexKind::IntersectionOmega: return "omega-inter";
    case IndexKind::PeelingOmega: return "omega-peel";
    }
    return "?";
}

IndexKind parse_index(const std::string& s) {
    if (s == "nu") return IndexKind::IntersectionNu;
    if (s == "omega-inter") return IndexKind::IntersectionOmega;
    if (s == "omega-peel") return IndexKind::PeelingOmega;
    fail(ErrorCode::Parse, "unknown index kind '" + s + "'");
}

Poly a_symbol(int k, int i) { return Poly::variable("a_{" + std::to_string(k) + "," + std::to_string(i) + "}"); }

ASymbol single_primitive(bool ones) {
    return [ones](int k, int i) {
        if (k != 1) return Poly();
        return ones ? Poly(1) : Poly::variable("f_" + std::to_string(i));
    };
}

ASymbol specialized(std::map<std::pair<int, int>, mpq_class> values) {
    return [values = std::move(values)](int k, int i) {
        auto it = values.find({k, i});
        return it == values.end() ? a_symbol(k, i) : Poly(it->second);
    };
}

mpz_class gbinom(long x, long k) {
    if (k < 0) return 0;
    mpz_class num = 1, den = 1;
    for (long j = 0; j < k; ++j) {
        num *= x - j;
        den *= j + 1;
    }
    return num / den;
}

namespace {

mpq_class factorial(int m) {
    mpz_class r = 1;
    for (int j = 2; j <= m; ++j) r *= j;
    return mpq_class(r);
}

Poly x_pow(int e) { return e ? Poly::variable("x", e) : Poly(1); }

// sum_{i=1}^{b} a_{d,b-i} (-L)^i / i!
Poly l_factor(const ASymbol& a, int d, int b) {
    Poly out;
    for (int i = 1; i <= b; ++i) {
        mpq_class c = mpq_class(i % 2 ? -1 : 1) / factorial(i);
        out += a(d, b - i) * Poly::variable("L", i) * Poly(c);
    }
    return out;
}

// Order-dependent data of a connected diagram, shared across weightings.
struct DiagramData {
    ChordOrder order;       // order used for A and the index
    std::vector<int> index; // by rank - 1
    std::vector<int> terminals;
    std::vector<char> is_terminal; // by chord
};

DiagramData diagram_data(const Diagram& c, IndexKind k) {
    DiagramData dd;
    dd.order = k == IndexKind::PeelingOmega ? peeling_order(c) : intersection_order(c);
    dd.index = k == IndexKind::IntersectionNu ? nu_vector(c) : omega_vector(c, dd.order);
    dd.terminals = terminal_positions(c, dd.order);
    dd.is_terminal.assign(c.size(), 0);
    for (int t : terminal_chords(c)) dd.is_terminal[t] = 1;
    return dd;
}

mpz_class w_of(const DiagramData& dd, const std::vector<int>& weight, int s, bool hat) {
    mpz_class w = 1;
    int b = dd.terminals.front();
    for (std::size_t r = 0; r < dd.index.size(); ++r) {
        if (hat && static_cast<int>(r) + 1 == b) continue;
        int d = weight[dd.order.sequence[r]];
        w *= gbinom(static_cast<long>(d) * s + dd.index[r] - 2, dd.index[r]);
    }
    return w;
}

Poly A_of(const DiagramData& dd, const std::vector<int>& weight, const ASymbol& a) {
    Poly A(1);
    for (std::size_t c = 0; c < weight.size(); ++c)
        if (!dd.is_terminal[c]) A *= a(weight[c], 0);
    for (std::size_t j = 1; j < dd.terminals.size(); ++j) {
        int t = dd.terminals[j];
        A *= a(weight[dd.order.sequence[t - 1]], t - dd.terminals[j - 1]);
    }
    return A;
}

} // namespace

mpz_class weight_w(const WeightedDiagram& c, int s, IndexKind k) { return w_of(diagram_data(c.d, k), c.weight, s, false); }
mpz_class weight_w_hat(const WeightedDiagram& c, int s, IndexKind k) {
    return w_of(diagram_data(c.d, k), c.weight, s, true);
}
Poly weight_A(const WeightedDiagram& c, IndexKind k, const ASymbol& a) { return A_of(diagram_data(c.d, k), c.weight, a); }

void for_each_weighting(int parts, int max_total, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> w(parts, 1);
    if (parts > max_total) return;
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts) {
            f(w);
            return;
        }
        // each later part needs at least 1
        for (int v = 1; v <= left - (parts - pos - 1); ++v) {
            w[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, max_total);
}

std::vector<int> spread_edge_weights(const CombMap& m, const std::vector<int>& edge_weights) {
    std::vector<int> w(m.half_edges(), 0);
    int e = 0;
    for (int h = 0; h < m.half_edges(); ++h) {
        if (m.alpha(h) < h) continue;
        w[h] = w[m.alpha(h)] = edge_weights.at(e++);
    }
    return w;
}

namespace {

// Per-map data for w, A, rid.
struct MapData {
    int rid = 0, omega_root = 0;
    std::vector<int> in_half;     // ingoing half of each edge (edge order: smallest half-edge)
    std::vector<int> omega;       // per edge
    std::vector<int> target_deg;  // per edge: in-degree of the vertex its ingoing half sits at; -1 off-tree
    int root_edge = 0;
};

MapData map_data(const CombMap& m) {
    MapData md;
    auto dfs = rightmost_dfs(m);
    std::vector<int> indeg(m.vertex_count(), 0);
    for (int h = 0; h < m.half_edges(); ++h)
        if (dfs.ingoing[h]) ++indeg[dfs.vertex[h]];
    md.rid = indeg[dfs.vertex[m.root()]];
    for (int h = 0; h < m.half_edges(); ++h) {
        if (m.alpha(h) < h) continue;
        int g = dfs.ingoing[h] ? h : m.alpha(h);
        if (g == m.root()) md.root_edge = static_cast<int>(md.in_half.size());
        md.in_half.push_back(g);
        md.omega.push_back(omega_edge(m, dfs, g));
        md.target_deg.push_back(dfs.tree[g] ? indeg[dfs.vertex[g]] : -1);
    }
    md.omega_root = md.omega[md.root_edge];
    return md;
}

mpz_class map_w_of(const MapData& md, const std::vector<int>& ew, int s, bool hat) {
    mpz_class w = 1;
    for (std::size_t e = 0; e < ew.size(); ++e) {
        if (hat && static_cast<int>(e) == md.root_edge) continue;
        w *= gbinom(static_cast<long>(ew[e]) * s + md.omega[e] - 2, md.omega[e]);
    }
    return w;
}

Poly map_A_of(const MapData& md, const std::vector<int>& ew, const ASymbol& a) {
    Poly A(1);
    for (std::size_t e = 0; e < ew.size(); ++e) {
        if (static_cast<int>(e) == md.root_edge) continue;
        A *= a(ew[e], md.target_deg[e] < 0 ? 0 : md.target_deg[e]);
    }
    return A;
}

std::vector<int> edge_weights_of(const WeightedMap& m) {
    std::vector<int> ew;
    for (int h = 0; h < m.m.half_edges(); ++h)
        if (m.m.alpha(h) >= h) ew.push_back(m.weight.at(h));
    return ew;
}

} // namespace

mpz_class map_w(const WeightedMap& m, int s) { return map_w_of(map_data(m.m), edge_weights_of(m), s, false); }
mpz_class map_w_hat(const WeightedMap& m, int s) { return map_w_of(map_data(m.m), edge_weights_of(m), s, true); }
Poly map_A(const WeightedMap& m, const ASymbol& a) { return map_A_of(map_data(m.m), edge_weights_of(m), a); }
int omega_root(const CombMap& m) { return map_data(m).omega_root; }

Poly G_series_diagrams(const QftConfig& cfg, IndexKind k, const ASymbol& a, const Budget& b) {
    check_budget(b, "qft", cfg.xmax, b.qft);
    Poly G(1);
    for (int n = 1; n <= cfg.xmax; ++n)
        for (auto& c : enumerate_diagrams(n, DiagramClass::Connected, b)) {
            auto dd = diagram_data(c, k);
            int bpos = dd.terminals.front();
            for_each_weighting(n, cfg.xmax, [&](const std::vector<int>& w) {
                int norm = 0;
                for (int v : w) norm += v;
                Poly A = A_of(dd, w, a);
                if (A.is_zero()) return;
                int db = w[dd.order.sequence[bpos - 1]];
                G -= l_factor(a, db, bpos) * A * Poly(mpq_class(w_of(dd, w, cfg.s, false))) * x_pow(norm);
            });
        }
    return G;
}

Poly G_series_maps(const QftConfig& cfg, const ASymbol& a, const Budget& b) {
    check_budget(b, "qft", cfg.xmax, b.qft);
    Poly G(1);
    for (int n = 1; n <= cfg.xmax; ++n)
        for (auto& m : enumerate_maps(n, MapClass::Bridgeless, b)) {
            auto md = map_data(m);
            for_each_weighting(n, cfg.xmax, [&](const std::vector<int>& ew) {
                int norm = 0;
                for (int v : ew) norm += v;
                Poly A = map_A_of(md, ew, a);
                if (A.is_zero()) return;
                G -= l_factor(a, ew[md.root_edge], md.rid) * A * Poly(mpq_class(map_w_of(md, ew, cfg.s, false))) *
                     x_pow(norm);
            });
        }
    return G;
}

Poly dse_rhs(const Poly& G, const QftConfig& cfg, const ASymbol& a) {
    int X = var("x"), D = var("D");
    Poly H = G.subs("L", Poly::variable("D")) - Poly(1);
    int jet = cfg.rho_jet > 0 ? cfg.rho_jet : cfg.lmax + cfg.xmax + 1;
    Poly out(1);
    for (int k = 1; k <= cfg.xmax; ++k) {
        int cap = cfg.xmax - k;
        long e = 1 - static_cast<long>(cfg.s) * k;
        Poly P(1), Hm(1);
        P.cap(X, cap);
        Hm.cap(X, cap);
        for (int m = 1; m <= cap; ++m) {
            Hm *= H;
            P += Poly(mpq_class(gbinom(e, m))) * Hm;
        }
        P.clear_caps();
        // D^m applied to (e^{-L rho} - 1) F_k(rho) at rho = 0 is (-1)^m m! [rho^m]
        Poly applied;
        for (int m = 0; m <= std::max(P.degree(D), 0); ++m) {
            Poly Pm = P.coeff(D, m);
            if (Pm.is_zero()) continue;
            if (m + 1 > jet) fail(ErrorCode::TruncationTooTight, "operator needs " + std::to_string(m + 1) + " rho terms, jet is " + std::to_string(jet));
            Poly T;
            for (int j = 1; j <= m + 1; ++j) {
                mpq_class c = mpq_class(j % 2 ? -1 : 1) / factorial(j);
                T += a(k, m + 1 - j) * Poly::variable("L", j) * Poly(c);
            }
            T *= Poly(mpq_class(m % 2 ? -1 : 1) * factorial(m));
            applied += Pm * T;
        }
        out -= x_pow(k) * applied;
    }
    return out.cap(X, cfg.xmax);
}

namespace {

void compare(Report& r, const std::string& what, Poly lhs, Poly rhs, const QftConfig& cfg) {
    for (Poly* p : {&lhs, &rhs}) p->cap("x", cfg.xmax).cap("L", cfg.lmax);
    ++r.checked;
    if (lhs == rhs) return;
    ++r.violations;
    std::string diff = (lhs - rhs).str();
    if (diff.size() > 300) diff = diff.substr(0, 300) + "...";
    r.details.push_back(what + ": difference " + diff);
}

} // namespace

Report dse_verify_simple(int xmax, int lmax, bool ones, const Budget& b) {
    Report r = dse_verify_simple(xmax, lmax, single_primitive(ones), b);
    if (ones) r.name += " (f_i = 1)";
    return r;
}

Report dse_verify_simple(int xmax, int lmax, const ASymbol& a, const Budget& b) {
    Report r{"dse-simple", xmax, 0, 0, {}};
    QftConfig cfg{2, xmax, lmax, 0};
    Poly G = G_series_diagrams(cfg, IndexKind::IntersectionNu, a, b);
    compare(r, "G = 1 - x G(x, d/d(-rho))^-1 (e^{-L rho} - 1) F(rho)", G, dse_rhs(G, cfg, a), cfg);
    // first terms: f0 L x + (f1 L - f0 L^2/2) f0 x^2
    Poly x = Poly::variable("x"), L = Poly::variable("L");
    Poly f0 = a(1, 0), f1 = a(1, 1);
    Poly shown = f0 * L * x + (f1 * L - f0 * L * L * Poly(mpq_class(1, 2))) * f0 * x * x;
    Poly low = G - Poly(1);
    low.cap("x", 2);
    QftConfig two{2, std::min(xmax, 2), lmax, 0};
    compare(r, "first terms", low, shown, two);
    return r;
}

Report dse_verify_general(const QftConfig& cfg, const ASymbol& a, const Budget& b) {
    Report r{"dse-general s=" + std::to_string(cfg.s), cfg.xmax, 0, 0, {}};
    Poly G = G_series_diagrams(cfg, IndexKind::IntersectionNu, a, b);
    compare(r, "G = 1 - sum_k x^k G(x, d/d(-rho))^(1-sk) (e^{-L rho} - 1) F_k(rho)", G, dse_rhs(G, cfg, a), cfg);
    return r;
}

Report crazy_formula_check(int s, int imax, IndexKind kind, const Budget& bud) {
    Report r{std::string("refined identity ") + index_name(kind) + " s=" + std::to_string(s), imax, 0, 0, {}};
    check_budget(bud, "qft", imax, bud.qft);
    int top = imax + 1;
    using Key = std::tuple<int, int, int>; // norm, b, index at b
    std::map<Key, Poly> hatted;            // sum of w-hat A
    std::map<std::pair<int, int>, Poly> first; // (norm, l) -> sum of w a_{d(b), b-l} A over b >= l
    int max_index = 0;
    for (int n = 1; n <= top; ++n)
        for (auto& c : enumerate_diagrams(n, DiagramClass::Connected, bud)) {
            auto dd = diagram_data(c, kind);
            int bpos = dd.terminals.front();
            int ib = dd.index[bpos - 1];
            max_index = std::max(max_index, ib);
            for_each_weighting(n, top, [&](const std::vector<int>& w) {
                int norm = 0;
                for (int v : w) norm += v;
                Poly A = A_of(dd, w, a_symbol);
                hatted[{norm, bpos, ib}] += Poly(mpq_class(w_of(dd, w, s, true))) * A;
                Poly wA = Poly(mpq_class(w_of(dd, w, s, false))) * A;
                int db = w[dd.order.sequence[bpos - 1]];
                for (int l = 1; l <= bpos; ++l) first[{norm, l}] += wA * a_symbol(db, bpos - l);
            });
        }
    auto get = [](auto& m, auto key) { auto it = m.find(key); return it == m.end() ? Poly() : it->second; };
    long zero_n = 0, nonzero = 0;
    for (int i = 1; i <= imax; ++i)
        for (int j = 1; j <= imax; ++j)
            for (int n = 0; n <= max_index + 1; ++n) {
                Poly lhs = get(hatted, Key{i + 1, j + 1, n});
                Poly rhs;
                for (int k = 1; k <= i; ++k)
                    for (int l = 1; l <= j; ++l) {
                        Poly f = get(first, std::pair{k, l});
                        Poly g = get(hatted, Key{i - k + 1, j - l + 1, n - 1});
                        if (f.is_zero() || g.is_zero()) continue;
                        rhs += Poly(mpq_class(gbinom(j, l))) * f * g;
                    }
                if (n == 0) {
                    // n = 0 is outside the identity's range; record whether it is empty
                    if (!lhs.is_zero()) ++zero_n;
                    continue;
                }
                ++r.checked;
                if (!lhs.is_zero()) ++nonzero;
                if (lhs == rhs) continue;
                ++r.violations;
                if (r.details.size() < 8)
                    r.details.push_back("stratum i=" + std::to_string(i) + " j=" + std::to_string(j) + " n=" + std::to_string(n));
            }
    r.details.push_back(std::to_string(r.checked) + " strata with n >= 1 (" + std::to_string(nonzero) + " nonempty); " + std::to_string(zero_n) +
                        " nonempty n = 0 strata (not covered by the identity)");
    return r;
}

namespace {

std::vector<int> root_cycle(const CombMap& m, int start) {
    std::vector<int> out{start};
    for (int h = m.sigma(start); h != start; h = m.sigma(h)) out.push_back(h);
    return out;
}

void check_weights(const WeightedMap& m) {
    if (static_cast<int>(m.weight.size()) != m.m.half_edges()) fail(ErrorCode::Internal, "weight vector has the wrong length");
    for (int h = 0; h < m.m.half_edges(); ++h)
        if (m.weight[h] < 1 || m.weight[h] != m.weight[m.m.alpha(h)]) fail(ErrorCode::Internal, "edge weights must be positive and shared by both halves");
}

} // namespace

WeightedMap map_combine(const WeightedMap& w1, const WeightedMap& w2, int i, const std::vector<int>& S) {
    const CombMap &m1 = w1.m, &m2 = w2.m;
    if (!is_bridgeless(m1) || !is_bridgeless(m2)) fail(ErrorCode::NotBridgeless, "combination needs bridgeless maps");
    check_weights(w1);
    check_weights(w2);
    auto dfs1 = rightmost_dfs(m1), dfs2 = rightmost_dfs(m2);
    int d1 = rid(m1), d2 = rid(m2);
    if (i < 1 || i > d2) fail(ErrorCode::BadMultiset, "i must lie in 1..rid(M2)");
    if (static_cast<int>(S.size()) != i || !std::is_sorted(S.begin(), S.end()) || S.front() < 1 || S.back() > d1)
        fail(ErrorCode::BadMultiset, "S must be a non-decreasing list of i positions in 1..rid(M1)");
    int n1 = m1.half_edges(), n2 = m2.half_edges();
    int x = n1 + n2, total = x + 1;
    std::vector<int> s(total, -1), a(total, -1), w(total, 0);
    for (int h = 0; h < n1; ++h) {
        s[h] = m1.sigma(h);
        a[h] = m1.alpha(h);
        w[h] = w1.weight[h];
    }
    for (int h = 0; h < n2; ++h) {
        s[n1 + h] = n1 + m2.sigma(h);
        a[n1 + h] = n1 + m2.alpha(h);
        w[n1 + h] = w2.weight[h];
    }
    // blocks of M2's root vertex: runs ending at an ingoing half-edge, counterclockwise from after the root
    int r2 = m2.root();
    std::vector<std::vector<int>> groups(1);
    for (int h : root_cycle(m2, m2.sigma(r2))) {
        groups.back().push_back(n1 + h);
        if (dfs2.ingoing[h]) groups.emplace_back();
    }
    groups.pop_back();
    std::vector<int> cyc;
    int loc = 0;
    for (int h : root_cycle(m1, m1.root())) {
        cyc.push_back(h);
        if (!dfs1.ingoing[h]) continue;
        ++loc;
        for (int k = 0; k < i; ++k)
            if (S[k] == loc) cyc.insert(cyc.end(), groups[k].begin(), groups[k].end());
    }
    cyc.push_back(x);
    auto close = [&](const std::vector<int>& c) {
        for (std::size_t j = 0; j < c.size(); ++j) s[c[j]] = c[(j + 1) % c.size()];
    };
    close(cyc);
    if (i < d2) {
        std::vector<int> rest;
        for (int k = i; k < d2; ++k) rest.insert(rest.end(), groups[k].begin(), groups[k].end());
        close(rest);
    }
    a[n1 + r2] = x;
    a[x] = n1 + r2;
    w[x] = w[n1 + r2];
    return {CombMap::from_permutations(std::move(s), std::move(a), m1.root()), std::move(w)};
}

MapCombination map_split(const WeightedMap& wm) {
    const CombMap& m = wm.m;
    if (!is_bridgeless(m)) fail(ErrorCode::NotBridgeless, "split needs a bridgeless map");
    check_weights(wm);
    if (rid(m) < 2) fail(ErrorCode::BadMultiset, "maps with rid < 2 are not combinations");
    auto dfs = rightmost_dfs(m);
    int r = m.root(), n = m.half_edges();
    int x = m.sigma_inv(r), r2 = m.alpha(x);
    int R = dfs.vertex[r];
    auto around = root_cycle(m, m.sigma(r)); // ends with r
    std::vector<int> group(n, -1);
    int g = 0;
    for (int h : around) {
        group[h] = g;
        if (dfs.ingoing[h]) ++g;
    }
    std::vector<char> in2(n, 0);
    std::vector<int> stack;
    auto include = [&](int h) {
        if (in2[h]) return;
        if (dfs.vertex[h] == R) {
            for (int k : around)
                if (group[k] == group[h] && !in2[k]) in2[k] = 1, stack.push_back(k);
        } else {
            int k = h;
            do {
                in2[k] = 1;
                stack.push_back(k);
                k = m.sigma(k);
            } while (k != h);
        }
    };
    include(r2);
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        if (h == r2 || m.dangling(h)) continue;
        include(m.alpha(h));
    }
    if (in2[r] || in2[x]) fail(ErrorCode::Internal, "root vertex does not split");

    MapCombination out;
    // M2 blocks at the root vertex, counterclockwise from the root, and their locations in M1
    std::vector<std::vector<int>> blocks;
    int loc = 0;
    for (int h : root_cycle(m, r)) {
        if (in2[h]) {
            if (blocks.empty() || !in2[m.sigma_inv(h)]  || group[m.sigma_inv(h)] != group[h]) {
                blocks.emplace_back();
                out.S.push_back(loc);
            }
            blocks.back().push_back(h);
        } else if (h != x && dfs.ingoing[h]) {
            ++loc;
        }
    }
    out.i = static_cast<int>(blocks.size());

    std::vector<char> keep1(n, 0);
    for (int h = 0; h < n; ++h) keep1[h] = !in2[h] && h != x;
    std::vector<int> idx1;
    CombMap m1 = restrict_map(m, keep1, r, &idx1);
    std::vector<int> w1(m1.half_edges());
    for (int h = 0; h < n; ++h)
        if (idx1[h] >= 0) w1[idx1[h]] = wm.weight[h];

    std::vector<int> idx2(n, -1);
    int n2 = 0;
    for (int h = 0; h < n; ++h)
        if (in2[h]) idx2[h] = n2++;
    std::vector<int> s2(n2), a2(n2), w2(n2);
    for (int h = 0; h < n; ++h) {
        if (!in2[h]) continue;
        w2[idx2[h]] = wm.weight[h];
        a2[idx2[h]] = h == r2 ? idx2[h] : idx2[m.alpha(h)];
        if (dfs.vertex[h] != R && dfs.vertex[h] != dfs.vertex[r2]) s2[idx2[h]] = idx2[m.sigma(h)];
    }
    std::vector<int> root_vertex;
    if (dfs.vertex[r2] == R) {
        for (auto& b : blocks) root_vertex.insert(root_vertex.end(), b.begin(), b.end());
    } else {
        root_vertex.push_back(r2);
        for (auto& b : blocks) root_vertex.insert(root_vertex.end(), b.begin(), b.end());
        for (int h = m.sigma(r2); h != r2; h = m.sigma(h)) root_vertex.push_back(h);
    }
    for (std::size_t j = 0; j < root_vertex.size(); ++j)
        s2[idx2[root_vertex[j]]] = idx2[root_vertex[(j + 1) % root_vertex.size()]];
    out.m1 = {m1, std::move(w1)};
    out.m2 = {CombMap::from_permutations(std::move(s2), std::move(a2), idx2[r2]), std::move(w2)};
    return out;
}

namespace {

std::string map_pair_text(const CombMap& a, const CombMap& b) {
    auto text = [](const CombMap& m) {
        std::string s = "sigma=[";
        for (int h = 0; h < m.half_edges(); ++h) s += (h ? "," : "") + std::to_string(m.sigma(h));
        s += "] alpha=[";
        for (int h = 0; h < m.half_edges(); ++h) s += (h ? "," : "") + std::to_string(m.alpha(h));
        return s + "] root=" + std::to_string(m.root());
    };
    return text(a) + " / " + text(b);
}

} // namespace

Report map_combination_check(int nmax, const Budget& b) {
    Report r{"map combine/split", nmax, 0, 0, {}};
    check_budget(b, "maps", nmax, b.maps);
    auto note = [&r](const std::string& what) {
        ++r.violations;
        if (r.details.size() < 8) r.details.push_back(what);
    };
    std::vector<std::vector<CombMap>> maps(nmax + 1);
    for (int n = 1; n <= nmax; ++n) maps[n] = enumerate_maps(n, MapClass::Bridgeless, b);
    auto unit = [](const CombMap& m) { return WeightedMap{m, std::vector<int>(m.half_edges(), 1)}; };
    for (int n = 2; n <= nmax; ++n) {
        // every combination of total size n, with two weight patterns on M2 so weights are tracked
        long combos = 0;
        std::set<std::vector<int>> image;
        for (int n1 = 1; n1 < n; ++n1)
            for (auto& m1 : maps[n1])
                for (auto& m2 : maps[n - n1]) {
                    int d1 = rid(m1), d2 = rid(m2);
                    WeightedMap w1 = unit(m1), w2 = unit(m2);
                    for (int h = 0; h < m2.half_edges(); ++h) w2.weight[h] = 1 + (std::min(h, m2.alpha(h)) % 2);
                    for (int i = 1; i <= d2; ++i) {
                        std::vector<int> S(i, 1);
                        while (true) {
                            ++r.checked;
                            ++combos;
                            auto m = map_combine(w1, w2, i, S);
                            image.insert(canonical_code(m.m));
                            if (!is_bridgeless(m.m) || rid(m.m) != d1 + i) note("combination is not bridgeless with rid d1 + i: " + map_pair_text(m1, m2));
                            auto back = map_split(m);
                            if (back.i != i || back.S != S || canonical_code(back.m1.m) != canonical_code(m1) ||
                                canonical_code(back.m2.m) != canonical_code(m2))
                                note("split does not invert combine: " + map_pair_text(m1, m2) + " i=" + std::to_string(i));
                            else if (map_w_hat(m, 2) != map_w_hat(back.m1, 2) * map_w(back.m2, 2))
                                note("w-hat does not factor: " + map_pair_text(m1, m2));
                            int k = i - 1;
                            while (k >= 0 && S[k] == d1) --k;
                            if (k < 0) break;
                            ++S[k];
                            for (int j = k + 1; j < i; ++j) S[j] = S[k];
                        }
                    }
                }
        long target = 0;
        for (auto& m : maps[n])
            if (rid(m) >= 2) ++target;
        if (combos != target || static_cast<long>(image.size()) != target)
            note("n=" + std::to_string(n) + ": " + std::to_string(combos) + " combinations, " + std::to_string(image.size()) +
                 " distinct, " + std::to_string(target) + " maps with rid >= 2");
        r.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(combos) + " combinations onto " +
                            std::to_string(target) + " maps with rid >= 2");
    }
    return r;
}

namespace {

struct MapRecord {
    int norm, rid, omega_root, d_root;
    mpz_class w, w_hat;
    Poly A;
};

std::vector<MapRecord> map_records(const QftConfig& cfg, const ASymbol& a, const Budget& b) {
    check_budget(b, "qft", cfg.xmax, b.qft);
    std::vector<MapRecord> out;
    for (int n = 1; n <= cfg.xmax; ++n)
        for (auto& m : enumerate_maps(n, MapClass::Bridgeless, b)) {
            auto md = map_data(m);
            for_each_weighting(n, cfg.xmax, [&](const std::vector<int>& ew) {
                int norm = 0;
                for (int v : ew) norm += v;
                out.push_back({norm, md.rid, md.omega_root, ew[md.root_edge], map_w_of(md, ew, cfg.s, false),
                               map_w_of(md, ew, cfg.s, true), map_A_of(md, ew, a)});
            });
        }
    return out;
}

Poly gd_from(const std::vector<MapRecord>& recs, int d, bool hat, bool with_c) {
    Poly out;
    for (auto& r : recs) {
        if (r.rid != d) continue;
        Poly t = Poly(mpq_class(hat ? r.w_hat : r.w)) * r.A * x_pow(r.norm);
        if (with_c && r.omega_root) t *= Poly::variable("c", r.omega_root);
        out += t;
    }
    return out;
}

} // namespace

Poly Gd_series(const QftConfig& cfg, int d, bool hat, const ASymbol& a, const Budget& b) {
    return gd_from(map_records(cfg, a, b), d, hat, true);
}

Report map_identity_check(const QftConfig& cfg, int dmax, bool root_coupled, const Budget& b) {
    Report r{root_coupled ? "map identity (root-coupled)" : "map identity (dec form)", dmax, 0, 0, {}};
    auto recs = map_records(cfg, a_symbol, b);
    int maxrid = 0;
    for (auto& rec : recs) maxrid = std::max(maxrid, rec.rid);
    Poly c = Poly::variable("c"), x = Poly::variable("x");
    for (int d = 2; d <= dmax; ++d) {
        Poly lhs = gd_from(recs, d, true, true);
        Poly rhs;
        for (int i = 1; i < d; ++i) {
            int d1 = d - i;
            Poly g1 = gd_from(recs, d1, true, true);
            for (int d2 = i; d2 <= maxrid; ++d2) {
                Poly second;
                if (root_coupled) {
                    for (auto& rec : recs)
                        if (rec.rid == d2)
                            second += Poly(mpq_class(rec.w)) * a_symbol(rec.d_root, d2 - i) * rec.A * x_pow(rec.norm);
                } else {
                    Poly dec;
                    for (int k = 1; k <= cfg.xmax; ++k) dec += a_symbol(k, d2 - i) * (Poly(1) - x) * x_pow(k - 1);
                    second = dec * gd_from(recs, d2, false, false);
                }
                second.cap("x", cfg.xmax);
                rhs += Poly(mpq_class(gbinom(d1 + i - 1, i))) * g1 * second;
            }
        }
        rhs *= c;
        lhs.cap("x", cfg.xmax);
        rhs.cap("x", cfg.xmax);
        ++r.checked;
        if (lhs == rhs) continue;
        ++r.violations;
        std::string diff = (lhs - rhs).str();
        if (diff.size() > 300) diff = diff.substr(0, 300) + "...";
        r.details.push_back("d=" + std::to_string(d) + ": difference " + diff);
    }
    return r;
}

} // namespace chordatlas
