#include "qalg/polynomial.hpp"

#include <algorithm>

namespace qalg {

namespace {

void check_var(int n, VarIndex v) {
    if (v.a < 1 || v.a > n || v.b < 1 || v.b > n)
        throw DimensionError("variable index out of range for ring with " + std::to_string(n) + "^2 variables");
}

void check_same_ring(const Polynomial& x, const Polynomial& y) {
    if (x.var_bound() != y.var_bound()) throw DimensionError("polynomials over different variable counts");
}

}  // namespace

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(int n, VarIndex v) {
    check_var(n, v);
    Polynomial p(n);
    p.add_term({{v, 1}}, 1);
    return p;
}

Polynomial Polynomial::monomial(int n, const Monomial& m, const Rational& c) {
    Polynomial p(n);
    for (const auto& [v, e] : m) {
        check_var(n, v);
        if (e < 0) throw DimensionError("negative exponent in monomial");
    }
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    Monomial clean;
    for (const auto& [v, e] : m)
        if (e != 0) clean.emplace(v, e);
    auto [it, inserted] = terms_.try_emplace(clean, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    check_same_ring(lhs, rhs);
    Polynomial out(lhs.var_bound());
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            Monomial m = ml;
            for (const auto& [v, e] : mr) m[v] += e;
            out.add_term(m, cl * cr);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

int Polynomial::degree_in(VarIndex v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (m.empty() || c != 1) s += format_rational(c);
        bool needs_dot = !m.empty() && c != 1;
        if (needs_dot) s += "*";
        bool first_var = true;
        for (const auto& [v, e] : m) {
            if (!first_var) s += "*";
            first_var = false;
            s += "X" + std::to_string(v.a) + "_" + std::to_string(v.b);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

Polynomial permute_variables(const Permutation& g, const Polynomial& p) {
    if (g.size() != p.var_bound()) throw DimensionError("permutation degree does not match variable count");
    Polynomial out(p.var_bound());
    for (const auto& [m, c] : p.terms()) {
        Monomial pm;
        for (const auto& [v, e] : m) pm[VarIndex{g.apply(v.a), g.apply(v.b)}] += e;
        out.add_term(pm, c);
    }
    return out;
}

}  // namespace qalg
