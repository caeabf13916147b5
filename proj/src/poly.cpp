#include "chordatlas/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace chordatlas {

namespace {
std::mutex reg_mu;
std::unordered_map<std::string, int> reg_ids;
std::deque<std::string> reg_names; // stable references
} // namespace

int var(const std::string& name) {
    std::lock_guard g(reg_mu);
    auto it = reg_ids.find(name);
    if (it != reg_ids.end()) return it->second;
    int id = static_cast<int>(reg_names.size());
    reg_names.push_back(name);
    reg_ids.emplace(name, id);
    return id;
}

const std::string& var_name(int id) {
    std::lock_guard g(reg_mu);
    return reg_names.at(id);
}

Monomial monomial(std::initializer_list<std::pair<std::string, int>> parts) {
    Monomial m;
    for (auto& [n, e] : parts) m = mono_mul(m, Monomial{{var(n), e}});
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e) out.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    return out;
}

int mono_degree(const Monomial& m, int v) {
    for (auto& [x, e] : m)
        if (x == v) return e;
    return 0;
}

Poly::Poly(long c) {
    if (c) terms_[{}] = c;
}

Poly::Poly(const mpq_class& c) {
    if (c != 0) terms_[{}] = c;
}

Poly Poly::variable(const std::string& name, int exp) { return term({{var(name), exp}}, 1); }

Poly Poly::term(const Monomial& m, const mpq_class& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

Poly& Poly::cap(const std::string& name, int max_degree) { return cap(var(name), max_degree); }

Poly& Poly::cap(int v, int max_degree) {
    auto it = caps_.find(v);
    if (it == caps_.end() || it->second > max_degree) caps_[v] = max_degree;
    apply_caps();
    return *this;
}

bool Poly::within_caps(const Monomial& m) const {
    for (auto& [v, e] : m) {
        auto it = caps_.find(v);
        if (it != caps_.end() && e > it->second) return false;
    }
    return true;
}

void Poly::apply_caps() {
    for (auto it = terms_.begin(); it != terms_.end();) it = within_caps(it->first) ? std::next(it) : terms_.erase(it);
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0 || !within_caps(m)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::degree(int v) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m, v));
    return d;
}

Poly Poly::coeff(int v, int k) const {
    Poly out;
    out.caps_ = caps_;
    for (auto& [m, c] : terms_) {
        if (mono_degree(m, v) != k) continue;
        Monomial r;
        for (auto& p : m)
            if (p.first != v) r.push_back(p);
        out.add_term(r, c);
    }
    return out;
}

mpq_class Poly::constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

Poly Poly::subs(int v, const Poly& value) const {
    int top = degree(v);
    std::vector<Poly> powers{Poly(1)};
    for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * value);
    Poly out;
    out.caps_ = caps_;
    out.caps_.erase(v);
    for (auto& [m, c] : terms_) {
        int e = mono_degree(m, v);
        Monomial r;
        for (auto& p : m)
            if (p.first != v) r.push_back(p);
        Poly t = term(r, c);
        out += e ? t * powers[e] : t;
    }
    for (auto& [cv, d] : caps_)
        if (cv != v) out.cap(cv, d);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out(1), base = *this;
    out.caps_ = caps_;
    while (e) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [v, d] : o.caps_) {
        auto it = caps_.find(v);
        if (it == caps_.end() || it->second > d) caps_[v] = d;
    }
    apply_caps();
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    out.caps_ = a.caps_;
    for (auto& [v, d] : b.caps_) {
        auto it = out.caps_.find(v);
        if (it == out.caps_.end() || it->second > d) out.caps_[v] = d;
    }
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    using Key = std::vector<std::pair<std::string, int>>;
    std::vector<std::pair<Key, const mpq_class*>> rows;
    for (auto& [m, c] : terms_) {
        Key k;
        for (auto& [v, e] : m) k.emplace_back(var_name(v), e);
        std::sort(k.begin(), k.end());
        rows.emplace_back(std::move(k), &c);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : rows) {
        mpq_class a = abs(*c);
        if (first) {
            if (sgn(*c) < 0) os << '-';
        } else {
            os << (sgn(*c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = a == 1 && !k.empty();
        if (!unit) os << a.get_str();
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (!unit || i) os << '*';
            os << k[i].first;
            if (k[i].second != 1) os << '^' << k[i].second;
        }
    }
    return os.str();
}

} // namespace chordatlas
