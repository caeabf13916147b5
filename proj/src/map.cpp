#include "chordatlas/map.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "chordatlas/error.hpp"

namespace chordatlas {

namespace {

std::vector<int> orbits(const std::vector<int>& perm) {
    int m = static_cast<int>(perm.size());
    std::vector<int> id(m, -1);
    int next = 0;
    for (int h = 0; h < m; ++h) {
        if (id[h] >= 0) continue;
        for (int x = h; id[x] < 0; x = perm[x]) id[x] = next;
        ++next;
    }
    return id;
}

int orbit_count(const std::vector<int>& perm) {
    auto id = orbits(perm);
    return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
}

bool transitive(const std::vector<int>& sigma, const std::vector<int>& alpha) {
    int m = static_cast<int>(sigma.size());
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int g : {sigma[h], alpha[h]})
            if (!seen[g]) {
                seen[g] = 1;
                ++count;
                stack.push_back(g);
            }
    }
    return count == m;
}

// Vertices reachable from vertex `from` using non-dangling edges, skipping the
// edges flagged in `removed` (indexed by half-edge).
std::vector<char> reachable_vertices(const CombMap& m, const std::vector<int>& vert, int nverts, int from,
                                     const std::vector<char>& removed) {
    std::vector<char> seen(nverts, 0);
    std::vector<std::vector<int>> halves(nverts);
    for (int h = 0; h < m.half_edges(); ++h) halves[vert[h]].push_back(h);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : halves[v]) {
            if (m.dangling(h) || removed[h]) continue;
            int w = vert[m.alpha(h)];
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

} // namespace

CombMap CombMap::from_permutations(std::vector<int> sigma, std::vector<int> alpha, int root) {
    int m = static_cast<int>(sigma.size());
    if (m == 0 || static_cast<int>(alpha.size()) != m) fail(ErrorCode::NotInvolution, "sigma and alpha must have equal positive length");
    std::vector<char> hit(m, 0);
    for (int x : sigma) {
        if (x < 0 || x >= m || hit[x]) fail(ErrorCode::NotInvolution, "sigma is not a permutation");
        hit[x] = 1;
    }
    for (int h = 0; h < m; ++h)
        if (alpha[h] < 0 || alpha[h] >= m || alpha[alpha[h]] != h) fail(ErrorCode::NotInvolution, "alpha is not an involution");
    if (root < 0 || root >= m || alpha[root] != root) fail(ErrorCode::RootNotFixed, "alpha must fix the root");
    if (!transitive(sigma, alpha)) fail(ErrorCode::NotTransitive, "sigma and alpha do not act transitively");
    CombMap out;
    out.sigma_ = std::move(sigma);
    out.alpha_ = std::move(alpha);
    out.root_ = root;
    return out;
}

CombMap CombMap::trivial() { return from_permutations({0}, {0}, 0); }

int CombMap::sigma_inv(int h) const {
    int x = h;
    while (sigma_[x] != h) x = sigma_[x];
    return x;
}

int CombMap::size() const { return orbit_count(alpha_); }

bool CombMap::closed() const {
    for (int h = 0; h < half_edges(); ++h)
        if (alpha_[h] == h && h != root_) return false;
    return true;
}

std::vector<int> CombMap::vertex_of() const { return orbits(sigma_); }
int CombMap::vertex_count() const { return orbit_count(sigma_); }
std::vector<int> CombMap::edge_of() const { return orbits(alpha_); }

int CombMap::face_count() const {
    std::vector<int> phi(half_edges());
    for (int h = 0; h < half_edges(); ++h) phi[h] = sigma_[alpha_[h]];
    return orbit_count(phi);
}

Canonical canonical_form(const CombMap& m) {
    int n = m.half_edges();
    std::vector<int> relabel(n, -1), order;
    order.reserve(n);
    relabel[m.root()] = 0;
    order.push_back(m.root());
    for (std::size_t i = 0; i < order.size(); ++i) {
        int h = order[i];
        for (int g : {m.sigma(h), m.alpha(h)})
            if (relabel[g] < 0) {
                relabel[g] = static_cast<int>(order.size());
                order.push_back(g);
            }
    }
    std::vector<int> s(n), a(n);
    for (int h = 0; h < n; ++h) {
        s[relabel[h]] = relabel[m.sigma(h)];
        a[relabel[h]] = relabel[m.alpha(h)];
    }
    return {CombMap::from_permutations(std::move(s), std::move(a), 0), std::move(relabel)};
}

std::vector<int> canonical_code(const CombMap& m) {
    auto c = canonical_form(m);
    std::vector<int> code;
    code.reserve(2 * m.half_edges());
    for (int h = 0; h < m.half_edges(); ++h) {
        code.push_back(c.map.sigma(h));
        code.push_back(c.map.alpha(h));
    }
    return code;
}

int euler_characteristic(const CombMap& m) {
    return m.vertex_count() + m.size() + m.face_count() - m.half_edges();
}

bool is_planar(const CombMap& m) { return euler_characteristic(m) == 2; }

int genus(const CombMap& m) { return (2 - euler_characteristic(m)) / 2; }

std::vector<int> bridges(const CombMap& m) {
    auto vert = m.vertex_of();
    int nv = m.vertex_count();
    std::vector<int> out;
    std::vector<char> removed(m.half_edges(), 0);
    for (int h = 0; h < m.half_edges(); ++h) {
        int g = m.alpha(h);
        if (g <= h) continue; // dangling or already seen
        if (vert[h] == vert[g]) continue;
        removed[h] = removed[g] = 1;
        auto seen = reachable_vertices(m, vert, nv, vert[h], removed);
        removed[h] = removed[g] = 0;
        if (!seen[vert[g]]) out.push_back(h);
    }
    return out;
}

bool is_bridgeless(const CombMap& m) { return bridges(m).empty(); }

std::vector<int> bridge_first_labeling(const CombMap& m) {
    int n = m.half_edges();
    auto vert = m.vertex_of();
    int nv = m.vertex_count();
    std::vector<int> label(n, 0);
    std::vector<char> cut(n, 0);
    int cur = m.root(), next_label = 1;
    label[cur] = next_label++;
    while (true) {
        int nxt = m.sigma(cur);
        if (nxt == m.root()) break;
        if (m.dangling(nxt) || cut[nxt]) {
            cur = nxt;
        } else {
            int other = m.alpha(nxt);
            bool bridge = false;
            if (vert[nxt] != vert[other]) {
                cut[nxt] = cut[other] = 1;
                auto seen = reachable_vertices(m, vert, nv, vert[nxt], cut);
                cut[nxt] = cut[other] = 0;
                bridge = !seen[vert[other]];
            }
            if (bridge) {
                cur = other;
            } else {
                cut[nxt] = cut[other] = 1;
                cur = nxt;
            }
        }
        if (label[cur]) fail(ErrorCode::Internal, "corner labeled twice");
        label[cur] = next_label++;
    }
    return label;
}

int corner_with_label(const CombMap& m, int k) {
    auto lab = bridge_first_labeling(m);
    for (int h = 0; h < m.half_edges(); ++h)
        if (lab[h] == k) return h;
    fail(ErrorCode::CornerOutOfRange, "corner " + std::to_string(k) + " not in 1.." + std::to_string(m.half_edges()));
}

DfsResult rightmost_dfs(const CombMap& m) {
    int n = m.half_edges();
    DfsResult r;
    r.vertex = m.vertex_of();
    int nv = m.vertex_count();
    r.visit_pos.assign(nv, -1);
    r.entry.assign(nv, -1);
    r.ingoing.assign(n, 0);
    r.tree.assign(n, 0);
    std::vector<char> done(n, 0);

    struct Frame {
        int entry, next;
    };
    std::vector<Frame> stack;
    auto enter = [&](int h) {
        int v = r.vertex[h];
        r.visit_pos[v] = static_cast<int>(r.vertex_order.size());
        r.vertex_order.push_back(v);
        r.entry[v] = h;
        stack.push_back({h, m.sigma_inv(h)});
    };
    int root = m.root();
    r.ingoing[root] = 1;
    r.tree[root] = 1;
    done[root] = 1;
    enter(root);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == f.entry) {
            stack.pop_back();
            continue;
        }
        int h = f.next;
        f.next = m.sigma_inv(h);
        if (done[h] || m.dangling(h)) continue;
        int x = m.alpha(h);
        done[h] = done[x] = 1;
        r.ingoing[x] = 1;
        if (r.visit_pos[r.vertex[x]] < 0) {
            r.tree[h] = r.tree[x] = 1;
            enter(x);
        }
    }
    return r;
}

std::vector<int> tree_tour_labeling(const CombMap& m) {
    auto dfs = rightmost_dfs(m);
    std::vector<int> label(m.half_edges(), 0);
    int cur = m.root(), next_label = 1;
    label[cur] = next_label++;
    while (true) {
        int nxt = m.sigma(cur);
        if (nxt == m.root()) break;
        cur = (!m.dangling(nxt) && dfs.tree[nxt]) ? m.alpha(nxt) : nxt;
        if (label[cur]) fail(ErrorCode::Internal, "tour revisits a corner");
        label[cur] = next_label++;
    }
    return label;
}

std::vector<int> dfs_labeling(const CombMap& m) {
    auto dfs = rightmost_dfs(m);
    std::vector<int> label(m.half_edges(), 0);
    int next = 0;
    for (int v : dfs.vertex_order) {
        int e = dfs.entry[v];
        label[e] = ++next;
        for (int g = m.sigma(e); g != e; g = m.sigma(g)) {
            if (dfs.ingoing[g]) ++next;
            label[g] = next;
        }
    }
    return label;
}

int omega_edge(const CombMap& m, const DfsResult& dfs, int g) {
    if (!dfs.ingoing[g]) fail(ErrorCode::Internal, "omega needs the ingoing half of an edge");
    int count = 0;
    for (int x = m.sigma_inv(g); !dfs.ingoing[x]; x = m.sigma_inv(x)) ++count;
    return count;
}

std::vector<int> in_degrees_by_visit(const CombMap& m) {
    auto dfs = rightmost_dfs(m);
    std::vector<int> deg(dfs.vertex_order.size(), 0);
    for (int h = 0; h < m.half_edges(); ++h)
        if (dfs.ingoing[h]) ++deg[dfs.visit_pos[dfs.vertex[h]]];
    return deg;
}

int rid(const CombMap& m) { return in_degrees_by_visit(m).front(); }

CombMap insert_root_edge(const CombMap& m, int k) {
    int h = corner_with_label(m, k);
    int n = m.half_edges();
    std::vector<int> s = m.sigma_perm(), a = m.alpha_perm();
    int p = n, q = n + 1;
    s.resize(n + 2);
    a.resize(n + 2);
    s[q] = s[h];
    s[h] = q;
    s[p] = s[m.root()];
    s[m.root()] = p;
    a[p] = q;
    a[q] = p;
    return CombMap::from_permutations(std::move(s), std::move(a), m.root());
}

CombMap insert_map_bridge(const CombMap& m, const CombMap& m2, int k) {
    int h = corner_with_label(m, k);
    int n = m.half_edges(), n2 = m2.half_edges();
    std::vector<int> s = m.sigma_perm(), a = m.alpha_perm();
    for (int x = 0; x < n2; ++x) {
        s.push_back(m2.sigma(x) + n);
        a.push_back(m2.alpha(x) + n);
    }
    int b = n + n2, r2 = m2.root() + n;
    s.push_back(s[h]);
    s[h] = b;
    a.push_back(r2);
    a[r2] = b;
    return CombMap::from_permutations(std::move(s), std::move(a), m.root());
}

CombMap restrict_map(const CombMap& m, const std::vector<char>& keep, int new_root, std::vector<int>* old_to_new) {
    int n = m.half_edges();
    std::vector<int> idx(n, -1);
    int next = 0;
    for (int h = 0; h < n; ++h)
        if (keep[h]) idx[h] = next++;
    std::vector<int> s(next), a(next);
    for (int h = 0; h < n; ++h) {
        if (!keep[h]) continue;
        int g = m.sigma(h);
        while (!keep[g]) g = m.sigma(g);
        s[idx[h]] = idx[g];
        int o = m.alpha(h);
        a[idx[h]] = (h == new_root || !keep[o]) ? idx[h] : idx[o];
    }
    if (old_to_new) *old_to_new = idx;
    return CombMap::from_permutations(std::move(s), std::move(a), idx[new_root]);
}

EdgeRemoval remove_root_edge(const CombMap& m) {
    int r = m.root();
    int p = m.sigma(r);
    if (p == r) fail(ErrorCode::SizeOne, "the trivial map has no root edge");
    int q = m.alpha(p);
    if (q == p) fail(ErrorCode::Internal, "root edge is dangling");
    int pred = m.sigma_inv(q);
    if (pred == p) pred = r;
    if (pred == q) fail(ErrorCode::NotBridgeless, "root edge ends at a leaf");
    std::vector<char> keep(m.half_edges(), 1);
    keep[p] = keep[q] = 0;
    std::vector<int> idx;
    CombMap rest;
    try {
        rest = restrict_map(m, keep, r, &idx);
    } catch (const Error&) {
        fail(ErrorCode::NotBridgeless, "root edge is a bridge");
    }
    auto lab = bridge_first_labeling(rest);
    return {rest, lab[idx[pred]]};
}

BridgeCut cut_bridge(const CombMap& m, int h) {
    auto vert = m.vertex_of();
    int g = m.alpha(h);
    if (g == h) fail(ErrorCode::Internal, "dangling edge is not a bridge");
    std::vector<char> removed(m.half_edges(), 0);
    removed[h] = removed[g] = 1;
    auto seen = reachable_vertices(m, vert, m.vertex_count(), vert[m.root()], removed);
    if (seen[vert[h]] == seen[vert[g]]) fail(ErrorCode::Internal, "edge is not a bridge");
    int b = seen[vert[h]] ? h : g;
    int r2 = m.alpha(b);
    std::vector<char> near_keep(m.half_edges()), far_keep(m.half_edges());
    for (int x = 0; x < m.half_edges(); ++x) {
        near_keep[x] = seen[vert[x]] && x != b;
        far_keep[x] = !seen[vert[x]];
    }
    BridgeCut out;
    out.near = restrict_map(m, near_keep, m.root(), &out.near_index);
    out.far = restrict_map(m, far_keep, r2, &out.far_index);
    int pred = m.sigma_inv(b);
    out.k = bridge_first_labeling(out.near)[out.near_index[pred]];
    return out;
}

CombMap map_star_product(const CombMap& m1, const CombMap& m2, int i) {
    if (!is_bridgeless(m1) || !is_bridgeless(m2)) fail(ErrorCode::NotBridgeless, "star product needs bridgeless factors");
    if (i < 1 || i > m2.half_edges()) fail(ErrorCode::CornerOutOfRange, "marked corner " + std::to_string(i));
    if (m1.size() == 1) return insert_root_edge(m2, i);
    auto [hat, l] = remove_root_edge(m1);
    return insert_root_edge(insert_map_bridge(hat, m2, l), i + l);
}

MapFactorization map_star_factorize(const CombMap& m) {
    if (m.size() < 2) fail(ErrorCode::SizeOne, "the trivial map has no factorization");
    if (!is_bridgeless(m)) fail(ErrorCode::NotBridgeless, "star factorization needs a bridgeless map");
    auto [rest, k] = remove_root_edge(m);
    auto br = bridges(rest);
    if (br.empty()) return {CombMap::trivial(), rest, k};
    auto target = canonical_code(m);
    for (int h : br) {
        auto cut = cut_bridge(rest, h);
        int i = k - cut.k;
        if (i < 1 || i > cut.far.half_edges()) continue;
        if (!is_bridgeless(cut.far)) continue;
        CombMap m1 = insert_root_edge(cut.near, cut.k);
        if (!is_bridgeless(m1)) continue;
        if (canonical_code(map_star_product(m1, cut.far, i)) != target) continue;
        return {m1, cut.far, i};
    }
    fail(ErrorCode::Internal, "no star factorization found");
}

std::vector<int> internal_corners(const CombMap& m) {
    if (!is_planar(m)) fail(ErrorCode::NotPlanar, "internal corners are defined for planar maps");
    std::vector<char> root_face(m.half_edges(), 0);
    int x = m.root();
    do {
        root_face[x] = 1;
        x = m.sigma(m.alpha(x));
    } while (x != m.root());
    std::vector<int> out;
    for (int h = 0; h < m.half_edges(); ++h)
        if (!root_face[m.sigma(h)]) out.push_back(h);
    return out;
}

} // namespace chordatlas
