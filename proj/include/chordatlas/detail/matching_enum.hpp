#pragma once

#include <vector>

namespace chordatlas {

namespace detail {

template <class F>
void matchings_rec(std::vector<int>& p, int first, F& f) {
    int m = static_cast<int>(p.size());
    while (first < m && p[first] >= 0) ++first;
    if (first == m) {
        f(const_cast<const std::vector<int>&>(p));
        return;
    }
    for (int j = first + 1; j < m; ++j) {
        if (p[j] >= 0) continue;
        p[first] = j;
        p[j] = first;
        matchings_rec(p, first + 1, f);
        p[first] = -1;
        p[j] = -1;
    }
}

} // namespace detail

// f receives the raw pairing array; wrap with Diagram::from_pairing if needed.
template <class F>
void for_each_matching(int n, F&& f) {
    std::vector<int> p(2 * n, -1);
    detail::matchings_rec(p, 0, f);
}

} // namespace chordatlas
