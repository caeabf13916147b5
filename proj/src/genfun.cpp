#include "chordatlas/genfun.hpp"

#include <algorithm>

#include "chordatlas/error.hpp"
#include "chordatlas/statistics.hpp"

namespace chordatlas {

std::vector<mpz_class> c_seq(int nmax) {
    std::vector<mpz_class> c(std::max(nmax, 0));
    for (int n = 1; n <= nmax; ++n) {
        if (n == 1) {
            c[0] = 1;
            continue;
        }
        mpz_class s = 0;
        for (int k = 1; k < n; ++k) s += (2 * k - 1) * c[k - 1] * c[n - k - 1];
        c[n - 1] = s;
    }
    return c;
}

std::vector<mpz_class> b_seq(int nmax) {
    std::vector<mpz_class> b(std::max(nmax, 0));
    for (int n = 1; n <= nmax; ++n) {
        if (n == 1) {
            b[0] = 1;
            continue;
        }
        mpz_class s = (2 * n - 3) * b[n - 2];
        for (int k = 1; k < n; ++k) s += b[k - 1] * b[n - k - 1];
        b[n - 1] = s;
    }
    return b;
}

mpz_class double_factorial(int odd) {
    mpz_class r = 1;
    for (int k = odd; k > 1; k -= 2) r *= k;
    return r;
}

namespace {

Poly diagram_series(int zmax, DiagramClass cls, const Budget& b) {
    check_budget(b, "series", zmax + 1, b.diagrams);
    int z = var("z"), u = var("u"), v = var("v");
    Poly out;
    for (int n = 1; n <= zmax + 1; ++n)
        for (auto& d : enumerate_diagrams(n, cls, b)) {
            Monomial m;
            if (n > 1) m.emplace_back(z, n - 1);
            int top = static_cast<int>(top_chords(d).size()), cr = crossings(d);
            m = mono_mul(m, Monomial{{u, top}});
            if (cr) m = mono_mul(m, Monomial{{v, cr}});
            out.add_term(m, 1);
        }
    return out.cap("z", zmax);
}

} // namespace

Poly series_B(int zmax, const Budget& b) { return diagram_series(zmax, DiagramClass::Indecomposable, b); }
Poly series_C(int zmax, const Budget& b) { return diagram_series(zmax, DiagramClass::Connected, b); }

Diagram ab_combine(const MarkedDiagram& d1, const Diagram& d2) {
    if (!is_indecomposable(d1.d) || !is_indecomposable(d2))
        fail(ErrorCode::NotIndecomposable, "combination needs indecomposable diagrams");
    auto top = top_chords(d1.d);
    for (int c : d1.marked)
        if (!std::binary_search(top.begin(), top.end(), c)) fail(ErrorCode::BadMultiset, "marked chord is not a top chord");
    int n1 = d1.d.size();
    std::vector<int> seq = d1.d.word();
    for (int l : d2.word()) seq.push_back(l + n1);
    // open arcs are labels whose left endpoint has been removed
    int open = n1;
    seq.erase(seq.begin() + 2 * n1);
    std::vector<int> marks = d1.marked;
    std::sort(marks.rbegin(), marks.rend());
    for (int t : marks) {
        auto it = std::find(seq.begin(), seq.end(), t);
        *it = open;
        open = t;
    }
    seq.insert(seq.begin(), open);
    return Diagram::from_word(seq);
}

std::pair<MarkedDiagram, Diagram> ab_factorize(const Diagram& d) {
    if (!is_indecomposable(d)) fail(ErrorCode::NotIndecomposable, "factorization needs an indecomposable diagram");
    if (d.size() == 1) fail(ErrorCode::SizeOne, "the one-chord diagram has no factorization");
    std::vector<int> seq = d.word();
    int open = seq.front();
    seq.erase(seq.begin());
    std::vector<int> marked_labels;
    int n = d.size();
    // first closed proper prefix; the open arc's endpoint is never closed
    auto closed_prefix = [&]() {
        std::vector<int> seen(n, 0);
        int pending = 0;
        for (std::size_t L = 0; L < seq.size(); ++L) {
            int l = seq[L];
            if (l == open) return 0;
            pending += ++seen[l] == 1 ? 1 : -1;
            if (pending == 0) return static_cast<int>(L) + 1;
        }
        return 0;
    };
    for (;;) {
        if (int L = closed_prefix()) {
            seq.insert(seq.begin() + L, open);
            std::vector<int> w1(seq.begin(), seq.begin() + L), w2(seq.begin() + L, seq.end());
            // chord index in D1 of each label: order of first occurrence
            std::vector<int> idx(n, -1);
            int next = 0;
            for (int l : w1)
                if (idx[l] < 0) idx[l] = next++;
            MarkedDiagram md{Diagram::from_word(w1), {}};
            for (int l : marked_labels)
                if (idx[l] >= 0) md.marked.push_back(idx[l]);
            std::sort(md.marked.begin(), md.marked.end());
            return {md, Diagram::from_word(w2)};
        }
        int po = static_cast<int>(std::find(seq.begin(), seq.end(), open) - seq.begin());
        std::vector<int> left(n, -1), right(n, -1);
        for (int p = 0; p < static_cast<int>(seq.size()); ++p) (left[seq[p]] < 0 ? left[seq[p]] : right[seq[p]]) = p;
        int best = -1;
        for (int c = 0; c < n; ++c) {
            if (c == open || !(left[c] < po && po < right[c])) continue;
            bool top = true;
            for (int e = 0; e < n && top; ++e)
                if (e != open && e != c && left[e] < left[c] && right[c] < right[e]) top = false;
            if (top && (best < 0 || left[c] < left[best])) best = c;
        }
        if (best < 0) fail(ErrorCode::Internal, "factorization found no top chord over the open arc");
        seq[left[best]] = open;
        marked_labels.push_back(open);
        open = best;
    }
}

namespace {

void compare(Report& r, const std::string& what, const Poly& lhs, const Poly& rhs) {
    ++r.checked;
    if (lhs == rhs) return;
    ++r.violations;
    r.details.push_back(what + ": " + (lhs - rhs).str());
}

} // namespace

Report verify_ab(int nmax, const Budget& b) {
    Report r{"ab", nmax, 0, 0, {}};
    Poly z = Poly::variable("z"), u = Poly::variable("u"), v = Poly::variable("v");
    Poly B = series_B(nmax, b), C = series_C(nmax, b);
    Poly one_uv = Poly(1) + u * v;
    Poly rhsB = u + z * B.subs("u", one_uv) * B;
    rhsB.cap("z", nmax);
    compare(r, "B(z,u,v) = u + zB(z,1+uv,v)B(z,u,v)", B, rhsB);
    Poly rhsC = u + z * (C.subs("u", one_uv) - C.subs("u", Poly(1))) * C;
    rhsC.cap("z", nmax);
    compare(r, "C(z,u,v) = u + z(C(z,1+uv,v) - C(z,1,v))C(z,u,v)", C, rhsC);

    Poly B1 = B.subs("v", Poly(1)), C1 = C.subs("v", Poly(1));
    Poly ab = u + z * B1 * B1.subs("u", u + Poly(1));
    ab.cap("z", nmax);
    compare(r, "B(z,u) = u + zB(z,u)B(z,u+1)", B1, ab);
    Poly cs = u + z * C1 * (C1.subs("u", u + Poly(1)) - C1.subs("u", Poly(1)));
    cs.cap("z", nmax);
    compare(r, "C(z,u) = u + zC(z,u)(C(z,u+1) - C(z,1))", C1, cs);

    // displayed low-order terms
    auto U = [&](int k) { return Poly::variable("u", k); };
    auto Z = [&](int k) { return Poly::variable("z", k); };
    Poly shownB = u + z * (u + U(2)) + Z(2) * (3 * u + 5 * U(2) + 2 * U(3)) +
                  Z(3) * (15 * u + 32 * U(2) + 22 * U(3) + 5 * U(4));
    Poly shownC = u + z * U(2) + Z(2) * (2 * U(2) + 2 * U(3)) + Z(3) * (10 * U(2) + 12 * U(3) + 5 * U(4));
    int upto = std::min(nmax, 3);
    Poly b3 = B1, c3 = C1;
    b3.cap("z", upto);
    c3.cap("z", upto);
    shownB.cap("z", upto);
    shownC.cap("z", upto);
    compare(r, "B(z,u,1) low-order terms", b3, shownB);
    compare(r, "C(z,u,1) low-order terms", c3, shownC);
    return r;
}

Report lambda_count_check(int nmax, const Budget& b) {
    Report r{"lambda", nmax, 0, 0, {}};
    Poly C = series_C(nmax - 1, b);
    auto c = c_seq(nmax);
    int z = var("z"), u = var("u");
    for (int n = 1; n <= nmax; ++n) {
        Poly row = C.coeff(z, n - 1).subs("v", Poly(1));
        mpq_class total = row.subs("u", Poly(1)).constant();
        long maps = static_cast<long>(enumerate_maps(n, MapClass::Bridgeless, b).size());
        ++r.checked;
        if (total != maps || total != c[n - 1]) {
            ++r.violations;
            r.details.push_back("n=" + std::to_string(n) + ": series " + total.get_str() + ", maps " + std::to_string(maps));
        }
        std::string line = "n=" + std::to_string(n) + ":";
        for (int k = 0; k <= row.degree(u); ++k) {
            mpq_class cnt = row.coeff(u, k).constant();
            if (cnt != 0) line += " top" + std::to_string(k) + "=" + cnt.get_str();
        }
        r.details.push_back(line);
    }
    return r;
}

} // namespace chordatlas
