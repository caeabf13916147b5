#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chordatlas {

// Variables are interned by name; ids are process-wide.
int var(const std::string& name);
const std::string& var_name(int id);

// Sorted (variable id, positive exponent) pairs.
using Monomial = std::vector<std::pair<int, int>>;

// Multivariate polynomial with exact rational coefficients and optional
// per-variable degree caps applied eagerly.
class Poly {
public:
    using Terms = std::map<Monomial, mpq_class>;

    Poly() = default;
    Poly(long c);
    Poly(const mpq_class& c);
    static Poly variable(const std::string& name, int exp = 1);
    static Poly term(const Monomial& m, const mpq_class& c);

    const Terms& terms() const { return terms_; }
    const std::map<int, int>& caps() const { return caps_; }
    Poly& cap(const std::string& name, int max_degree);
    Poly& cap(int var, int max_degree);
    // Forget caps without touching terms; later products are no longer truncated.
    Poly& clear_caps() {
        caps_.clear();
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree(int var) const;
    // Coefficient of var^k, as a polynomial in the other variables.
    Poly coeff(int var, int k) const;
    Poly coeff(const std::string& name, int k) const { return coeff(var(name), k); }
    mpq_class constant() const;
    Poly subs(int var, const Poly& value) const;
    Poly subs(const std::string& name, const Poly& value) const { return subs(var(name), value); }
    Poly pow(unsigned e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const mpq_class& c);
    // Canonical text: terms sorted by exponent vector over names, e.g. "3*u^2*z - 1/2*L".
    std::string str() const;

private:
    bool within_caps(const Monomial& m) const;
    void apply_caps();
    Terms terms_;
    std::map<int, int> caps_;
};

Monomial monomial(std::initializer_list<std::pair<std::string, int>> parts);
Monomial mono_mul(const Monomial& a, const Monomial& b);
int mono_degree(const Monomial& m, int var);

} // namespace chordatlas
