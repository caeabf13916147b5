#include "chordatlas/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chordatlas/error.hpp"

namespace chordatlas {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

Diagram Diagram::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) fail(ErrorCode::GapInSupport, "a diagram needs at least one chord");
    int m = 2 * static_cast<int>(pairs.size());
    std::vector<int> p(m, -1);
    for (auto [a, b] : pairs) {
        if (a >= b) fail(ErrorCode::ReversedPair, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a < 0 || b >= m) fail(ErrorCode::GapInSupport, "point outside 0.." + std::to_string(m - 1));
        if (p[a] >= 0) fail(ErrorCode::DuplicatePoint, "point " + std::to_string(a));
        if (p[b] >= 0) fail(ErrorCode::DuplicatePoint, "point " + std::to_string(b));
        p[a] = b;
        p[b] = a;
    }
    Diagram d;
    d.p_ = std::move(p);
    return d;
}

Diagram Diagram::from_pairing(std::vector<int> pairing) {
    int m = static_cast<int>(pairing.size());
    if (m == 0 || m % 2) fail(ErrorCode::GapInSupport, "pairing length must be even and positive");
    for (int i = 0; i < m; ++i) {
        int j = pairing[i];
        if (j < 0 || j >= m) fail(ErrorCode::GapInSupport, "partner out of range");
        if (j == i || pairing[j] != i) fail(ErrorCode::DuplicatePoint, "not a perfect matching at point " + std::to_string(i));
    }
    Diagram d;
    d.p_ = std::move(pairing);
    return d;
}

Diagram Diagram::from_word(const std::vector<int>& word) {
    int m = static_cast<int>(word.size());
    std::vector<int> p(m, -1);
    std::vector<std::pair<int, int>> seen; // label -> first position, small n so linear scan
    for (int i = 0; i < m; ++i) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto& s) { return s.first == word[i]; });
        if (it == seen.end()) {
            seen.emplace_back(word[i], i);
        } else {
            if (it->second < 0) fail(ErrorCode::DuplicatePoint, "label used more than twice");
            p[i] = it->second;
            p[it->second] = i;
            it->second = -1;
        }
    }
    return from_pairing(std::move(p));
}

Diagram Diagram::one_chord() {
    Diagram d;
    d.p_ = {1, 0};
    return d;
}

std::vector<std::pair<int, int>> Diagram::chords() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size());
    for (int i = 0; i < points(); ++i)
        if (p_[i] > i) out.emplace_back(i, p_[i]);
    return out;
}

std::vector<int> Diagram::chord_of_point() const {
    std::vector<int> out(points());
    int next = 0;
    for (int i = 0; i < points(); ++i) {
        if (p_[i] > i) out[i] = next++;
        else out[i] = out[p_[i]];
    }
    return out;
}

bool crosses(std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first > b.first) std::swap(a, b);
    return a.first < b.first && b.first < a.second && a.second < b.second;
}

std::vector<std::vector<int>> intersection_graph(const Diagram& d) {
    auto ch = d.chords();
    int n = d.size();
    std::vector<std::vector<int>> out(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (ch[b].first < ch[a].second && ch[a].second < ch[b].second) out[a].push_back(b);
    return out;
}

bool is_connected(const Diagram& d) {
    auto ch = d.chords();
    int n = d.size();
    UnionFind uf(n);
    int comps = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n && ch[b].first < ch[a].second; ++b)
            if (ch[a].second < ch[b].second && uf.unite(a, b)) --comps;
    return comps == 1;
}

bool is_indecomposable(const Diagram& d) {
    int reach = 0;
    for (int i = 0; i + 1 < d.points(); ++i) {
        reach = std::max(reach, d.partner(i));
        if (reach == i) return false;
    }
    return true;
}

Diagram concat(const Diagram& a, const Diagram& b) {
    std::vector<int> p = a.pairing();
    int off = a.points();
    for (int x : b.pairing()) p.push_back(x + off);
    return Diagram::from_pairing(std::move(p));
}

int crossings(const Diagram& d) {
    auto ch = d.chords();
    int n = d.size(), count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (ch[b].first < ch[a].second && ch[a].second < ch[b].second) ++count;
    return count;
}

Diagram insert_root_chord(const Diagram& d, int k) {
    if (k < 1 || k > d.intervals())
        fail(ErrorCode::IntervalOutOfRange, "interval " + std::to_string(k) + " not in 1.." + std::to_string(d.intervals()));
    auto w = d.word();
    int fresh = d.size();
    std::vector<int> out;
    out.reserve(w.size() + 2);
    out.push_back(fresh);
    out.insert(out.end(), w.begin(), w.begin() + k);
    out.push_back(fresh);
    out.insert(out.end(), w.begin() + k, w.end());
    return Diagram::from_word(out);
}

Diagram insert_diagram(const Diagram& d, const Diagram& e, int k) {
    if (k < 1 || k > d.intervals())
        fail(ErrorCode::IntervalOutOfRange, "interval " + std::to_string(k) + " not in 1.." + std::to_string(d.intervals()));
    auto w = d.word();
    auto we = e.word();
    std::vector<int> out(w.begin(), w.begin() + k);
    for (int x : we) out.push_back(x + d.size());
    out.insert(out.end(), w.begin() + k, w.end());
    return Diagram::from_word(out);
}

RootRemoval remove_root_chord(const Diagram& d) {
    if (d.size() < 2) fail(ErrorCode::SizeOne, "cannot remove the root of the one-chord diagram");
    int r = d.partner(0);
    auto w = d.word();
    std::vector<int> rest;
    for (int i = 1; i < d.points(); ++i)
        if (i != r) rest.push_back(w[i]);
    return {Diagram::from_word(rest), r - 1};
}

Diagram restrict_chords(const Diagram& d, const std::vector<int>& chords) {
    auto w = d.word();
    std::vector<char> keep(d.size(), 0);
    for (int c : chords) keep[c] = 1;
    std::vector<int> out;
    for (int x : w)
        if (keep[x]) out.push_back(x);
    return Diagram::from_word(out);
}

Diagram star_product(const Diagram& c1, const Diagram& c2, int i) {
    if (!is_connected(c1) || !is_connected(c2)) fail(ErrorCode::NotConnected, "star product needs connected factors");
    if (i < 1 || i > c2.intervals()) fail(ErrorCode::IntervalOutOfRange, "marked interval " + std::to_string(i));
    if (c1.size() == 1) return insert_root_chord(c2, i);
    auto [hat, l] = remove_root_chord(c1);
    return insert_root_chord(insert_diagram(hat, c2, l), i + l);
}

namespace {

// Smallest closed segment of d's points that starts at `start`; returns its end.
int closed_block_end(const Diagram& d, int start) {
    int reach = start;
    for (int j = start; j < d.points(); ++j) {
        if (d.partner(j) < start) return -1;
        reach = std::max(reach, d.partner(j));
        if (reach == j) return j;
    }
    return -1;
}

// Every end j such that the segment start..j is closed under the matching.
std::vector<int> closed_block_ends(const Diagram& d, int start) {
    std::vector<int> out;
    int reach = start;
    for (int j = start; j < d.points(); ++j) {
        if (d.partner(j) < start) break;
        reach = std::max(reach, d.partner(j));
        if (reach == j) out.push_back(j);
    }
    return out;
}

std::vector<int> points_to_chords(const Diagram& d, int from, int to, bool inside) {
    auto cp = d.chord_of_point();
    std::vector<int> out;
    for (int i = 0; i < d.points(); ++i) {
        bool in = i >= from && i <= to;
        if (in == inside && d.partner(i) > i) out.push_back(cp[i]);
    }
    return out;
}

} // namespace

Factorization star_factorize(const Diagram& c) {
    if (c.size() < 2) fail(ErrorCode::SizeOne, "the one-chord diagram has no factorization");
    if (!is_connected(c)) fail(ErrorCode::NotConnected, "star factorization needs a connected diagram");
    auto [rest, k] = remove_root_chord(c);
    // Slide the root's right endpoint left until the diagram falls apart.
    auto w = rest.word();
    int fresh = rest.size();
    for (int q = k - 1; q >= 1; --q) {
        std::vector<int> trial{fresh};
        trial.insert(trial.end(), w.begin(), w.begin() + q);
        trial.push_back(fresh);
        trial.insert(trial.end(), w.begin() + q, w.end());
        if (is_connected(Diagram::from_word(trial))) continue;
        int end = closed_block_end(rest, q);
        if (end < 0) fail(ErrorCode::Internal, "no closed block after disconnection point");
        Diagram c2 = restrict_chords(rest, points_to_chords(rest, q, end, true));
        Diagram hat = restrict_chords(rest, points_to_chords(rest, q, end, false));
        return {insert_root_chord(hat, q), c2, k - q};
    }
    return {Diagram::one_chord(), rest, k};
}

Diagram varbox_product(const Diagram& c1, const Diagram& c2, int i) {
    if (!is_connected(c1) || !is_connected(c2)) fail(ErrorCode::NotConnected, "variant product needs connected factors");
    if (i < 1 || i > c2.intervals()) fail(ErrorCode::IntervalOutOfRange, "marked interval " + std::to_string(i));
    if (c1.size() == 1) return insert_root_chord(c2, i);
    auto [hat, l] = remove_root_chord(c1);
    return insert_root_chord(insert_diagram(c2, hat, i), i + l);
}

Factorization varbox_factorize(const Diagram& c) {
    if (c.size() < 2) fail(ErrorCode::SizeOne, "the one-chord diagram has no factorization");
    if (!is_connected(c)) fail(ErrorCode::NotConnected, "variant factorization needs a connected diagram");
    auto [rest, k] = remove_root_chord(c);
    // C1 minus its root sits as a closed block of `rest` around the root's endpoint.
    for (int a = 1; a <= k - 1; ++a) {
      for (int b : closed_block_ends(rest, a)) {
        if (b < k || b + 1 >= rest.points()) continue;
        Diagram hat = restrict_chords(rest, points_to_chords(rest, a, b, true));
        Diagram c2 = restrict_chords(rest, points_to_chords(rest, a, b, false));
        int l = k - a;
        if (!is_connected(c2)) continue;
        Diagram c1 = insert_root_chord(hat, l);
        if (!is_connected(c1)) continue;
        return {c1, c2, a};
      }
    }
    if (k < 1 || k > rest.intervals() || !is_connected(rest))
        fail(ErrorCode::Internal, "no variant factorization found");
    return {Diagram::one_chord(), rest, k};
}

Diagram iota(const Diagram& c) {
    if (!is_connected(c)) fail(ErrorCode::NotConnected, "iota is defined on connected diagrams");
    if (c.size() == 1) return c;
    auto f = star_factorize(c);
    return varbox_product(iota(f.c1), iota(f.c2), f.i);
}

} // namespace chordatlas
