#pragma once

#include <map>
#include <string>

#include "qalg/permutation.hpp"
#include "qalg/polynomial.hpp"

namespace qalg {

/// Element of the twisted group algebra R_n x| C[S_n]: a finite sum
/// sum_g p_g * g with polynomial coefficients. Multiplication twists the
/// right coefficient through the left permutation's action on variables:
///   (p1 g1)(p2 g2) = (p1 * (g1 . p2)) g1 g2.
/// Associative, not commutative.
class TwistedElement {
public:
    TwistedElement() = default;
    explicit TwistedElement(int n) : n_(n) {}

    static TwistedElement zero(int n) { return TwistedElement(n); }
    /// The unit 1 * id.
    static TwistedElement one(int n);
    static TwistedElement term(Polynomial p, const Permutation& g);
    static TwistedElement group_element(const Permutation& g);

    int group_size() const { return n_; }
    const std::map<Permutation, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& g, const Polynomial& p);

    TwistedElement& operator+=(const TwistedElement& rhs);
    TwistedElement& operator-=(const TwistedElement& rhs);
    friend TwistedElement operator+(TwistedElement lhs, const TwistedElement& rhs) { return lhs += rhs; }
    friend TwistedElement operator-(TwistedElement lhs, const TwistedElement& rhs) { return lhs -= rhs; }
    friend TwistedElement operator*(const TwistedElement& lhs, const TwistedElement& rhs);
    TwistedElement operator-() const;

    friend bool operator==(const TwistedElement&, const TwistedElement&) = default;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Permutation, Polynomial> terms_;
};

/// The starred element g* = (prod_{(a,b) in I(g^{-1})} X_{a,b}) g.
TwistedElement star(const Permutation& g);

/// The coefficient relating products of starred elements:
///   star(g1) * star(g2) = twist_factor(g1,g2) * star(g1 g2).
/// Computed from the inversions lost in the product, as a product of the
/// unordered-pair variables X_{a,b} X_{b,a}. Both set descriptions of the
/// lost inversions are evaluated and must agree.
Polynomial twist_factor(const Permutation& g1, const Permutation& g2);

/// The two set descriptions behind twist_factor, kept separate so their
/// agreement itself can be property-tested: first the inversions of
/// g1^{-1} dropped in (g1 g2)^{-1}, then the common inversions of g1 and
/// g2^{-1} transported by g1.
std::pair<Polynomial, Polynomial> twist_factor_forms(const Permutation& g1, const Permutation& g2);

enum class CanonicalKind { alpha, beta, gamma, delta };

/// The canonical elements built from starred cycles:
///   alpha_n   = sum of g* over all of S_n            (level ignored)
///   beta_l    = sum of t*_{m,k}, k = n-l+1 <= m <= n  (1 <= l <= n)
///   gamma_l   = prod of (id - t*_{m,k}), m = n..k+1   (descending)
///   delta_l   = prod of (id - (t*_k)^2 t*_{m,k+1}), m = n..k+1,
///               the last factor degenerating to (id - (t*_k)^2).
/// gamma_1 = delta_1 = beta_1 = id by convention.
TwistedElement canonical_element(CanonicalKind kind, int level, int n);

TwistedElement alpha_star(int n);
TwistedElement beta_star(int level, int n);
TwistedElement gamma_star(int level, int n);
TwistedElement delta_star(int level, int n);

}  // namespace qalg
