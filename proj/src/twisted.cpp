#include "qalg/twisted.hpp"

#include <algorithm>
#include <set>

namespace qalg {

TwistedElement TwistedElement::one(int n) {
    TwistedElement e(n);
    e.add_term(Permutation::identity(n), Polynomial::constant(n, 1));
    return e;
}

TwistedElement TwistedElement::term(Polynomial p, const Permutation& g) {
    if (p.var_bound() != g.size()) throw DimensionError("coefficient ring size does not match group degree");
    TwistedElement e(g.size());
    e.add_term(g, p);
    return e;
}

TwistedElement TwistedElement::group_element(const Permutation& g) {
    return term(Polynomial::constant(g.size(), 1), g);
}

void TwistedElement::add_term(const Permutation& g, const Polynomial& p) {
    if (g.size() != n_) throw DimensionError("permutation degree does not match algebra size");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& rhs) {
    if (n_ != rhs.n_) throw DimensionError("adding twisted elements of different degree");
    for (const auto& [g, p] : rhs.terms_) add_term(g, p);
    return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& rhs) {
    if (n_ != rhs.n_) throw DimensionError("subtracting twisted elements of different degree");
    for (const auto& [g, p] : rhs.terms_) add_term(g, -p);
    return *this;
}

TwistedElement operator*(const TwistedElement& lhs, const TwistedElement& rhs) {
    if (lhs.n_ != rhs.n_) throw DimensionError("multiplying twisted elements of different degree");
    TwistedElement out(lhs.n_);
    for (const auto& [g1, p1] : lhs.terms_) {
        for (const auto& [g2, p2] : rhs.terms_) {
            out.add_term(g1 * g2, p1 * permute_variables(g1, p2));
        }
    }
    return out;
}

TwistedElement TwistedElement::operator-() const {
    TwistedElement out(n_);
    for (const auto& [g, p] : terms_) out.terms_.emplace(g, -p);
    return out;
}

std::string TwistedElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, p] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + p.str() + ")" + to_string(g);
    }
    return s;
}

TwistedElement star(const Permutation& g) {
    const int n = g.size();
    Monomial m;
    for (auto [a, b] : inversion_set(g.inverse())) m[VarIndex{a, b}] += 1;
    return TwistedElement::term(Polynomial::monomial(n, m, 1), g);
}

namespace {

/// X_{a,b} X_{b,a} for an unordered pair.
Polynomial pair_variable(int n, int a, int b) {
    Monomial m;
    m[VarIndex{a, b}] += 1;
    m[VarIndex{b, a}] += 1;
    return Polynomial::monomial(n, m, 1);
}

}  // namespace

std::pair<Polynomial, Polynomial> twist_factor_forms(const Permutation& g1, const Permutation& g2) {
    if (g1.size() != g2.size()) throw DimensionError("twist factor of permutations of different degree");
    const int n = g1.size();

    // Inversions of g1^{-1} no longer inverted in (g1 g2)^{-1}.
    auto inv1 = inversion_set(g1.inverse());
    auto inv12 = inversion_set((g1 * g2).inverse());
    std::set<std::pair<int, int>> gone(inv1.begin(), inv1.end());
    for (auto pr : inv12) gone.erase(pr);
    Polynomial primary = Polynomial::constant(n, 1);
    for (auto [a, b] : gone) primary = primary * pair_variable(n, a, b);

    // Equivalent description through I(g1) and I(g2^{-1}), transported by g1.
    Polynomial alt = Polynomial::constant(n, 1);
    auto invg1 = inversion_set(g1);
    std::set<std::pair<int, int>> invg2i;
    for (auto pr : inversion_set(g2.inverse())) invg2i.insert(pr);
    for (auto [a, b] : invg1)
        if (invg2i.count({a, b})) alt = alt * pair_variable(n, g1.apply(a), g1.apply(b));

    return {std::move(primary), std::move(alt)};
}

Polynomial twist_factor(const Permutation& g1, const Permutation& g2) {
    auto [primary, alt] = twist_factor_forms(g1, g2);
    if (!(primary == alt)) throw std::logic_error("twist factor set descriptions disagree");
    return primary;
}

TwistedElement alpha_star(int n) {
    if (n < 1) throw DimensionError("alpha requires n >= 1");
    TwistedElement sum(n);
    for (const Permutation& g : johnson_trotter(n)) sum += star(g);
    return sum;
}

TwistedElement beta_star(int level, int n) {
    if (level < 1 || level > n) throw ConfigError("beta level out of range 1..n");
    const int k = n - level + 1;
    TwistedElement sum(n);
    for (int m = k; m <= n; ++m) sum += star(cycle(m, k, n));
    return sum;
}

TwistedElement gamma_star(int level, int n) {
    if (level < 1 || level > n) throw ConfigError("gamma level out of range 1..n");
    if (level == 1) return TwistedElement::one(n);
    const int k = n - level + 1;
    TwistedElement prod = TwistedElement::one(n);
    for (int m = n; m >= k + 1; --m) prod = prod * (TwistedElement::one(n) - star(cycle(m, k, n)));
    return prod;
}

TwistedElement delta_star(int level, int n) {
    if (level < 1 || level > n) throw ConfigError("delta level out of range 1..n");
    if (level == 1) return TwistedElement::one(n);
    const int k = n - level + 1;
    const TwistedElement tk_star = star(cycle(k + 1, k, n));
    const TwistedElement tk_sq = tk_star * tk_star;
    TwistedElement prod = TwistedElement::one(n);
    for (int m = n; m >= k + 1; --m) {
        // At m = k+1 the trailing starred cycle is the identity.
        TwistedElement tail = (m == k + 1) ? TwistedElement::one(n) : star(cycle(m, k + 1, n));
        prod = prod * (TwistedElement::one(n) - tk_sq * tail);
    }
    return prod;
}

TwistedElement canonical_element(CanonicalKind kind, int level, int n) {
    switch (kind) {
        case CanonicalKind::alpha: return alpha_star(n);
        case CanonicalKind::beta: return beta_star(level, n);
        case CanonicalKind::gamma: return gamma_star(level, n);
        case CanonicalKind::delta: return delta_star(level, n);
    }
    throw ConfigError("unknown canonical element kind");
}

}  // namespace qalg
