#pragma once

#include <compare>
#include <map>
#include <string>

#include "qalg/permutation.hpp"
#include "qalg/rational.hpp"
#include "qalg/word.hpp"

namespace qalg {

/// Index of the commuting variable X_{a,b}; both slots run over 1..n and
/// a = b is a valid variable.
struct VarIndex {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// Exponent table of a monomial; entries are strictly positive and the map
/// ordering (lexicographic on (a,b)) is the canonical term order.
using Monomial = std::map<VarIndex, int>;

/// Sparse polynomial in the n^2 commuting variables X_{a,b} with exact
/// rational coefficients. Zero coefficients are never stored, so equality
/// of canonical forms is map equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, VarIndex v);
    static Polynomial monomial(int n, const Monomial& m, const Rational& c = 1);

    int var_bound() const { return n_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Largest exponent of X_{a,b} over all terms (0 if the variable is absent).
    int degree_in(VarIndex v) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// Variable substitution X_{a,b} -> X_{g(a),g(b)}. A ring homomorphism and
/// a left group action in g.
Polynomial permute_variables(const Permutation& g, const Polynomial& p);

/// Evaluates p under X_{a,b} -> q(j_a, j_b) for the given word, in the
/// field F. QSpec lookups throw ConfigError when a pair is missing.
template <class F, class Q>
typename F::Elem evaluate_at_word(const Polynomial& p, const Q& q, const Word& j, const F& field) {
    if (static_cast<int>(j.size()) < p.var_bound())
        throw DimensionError("word too short to evaluate polynomial");
    typename F::Elem acc = field.zero();
    for (const auto& [mono, coeff] : p.terms()) {
        typename F::Elem term = field.from_rational(coeff);
        for (const auto& [v, e] : mono) {
            const int ja = j[static_cast<std::size_t>(v.a) - 1];
            const int jb = j[static_cast<std::size_t>(v.b) - 1];
            term = field.mul(term, field.pow(q.at(ja, jb), static_cast<std::uint64_t>(e)));
        }
        acc = field.add(acc, term);
    }
    return acc;
}

}  // namespace qalg
