#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "qalg/matrix.hpp"
#include "qalg/qspec.hpp"
#include "qalg/quon.hpp"
#include "qalg/twisted.hpp"
#include "qalg/word.hpp"

namespace qalg {

/// Ordered monomial basis of the weight subspace attached to Q, with the
/// word -> coordinate lookup used by every operator matrix. Row/column i
/// corresponds to words()[i]; columns hold images of basis vectors.
class WeightBasis {
public:
    explicit WeightBasis(MultisetQ Q) : q_(std::move(Q)), words_(multiset_words(q_)) {
        for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = static_cast<int>(i);
    }

    const MultisetQ& multiset() const { return q_; }
    int dimension() const { return static_cast<int>(words_.size()); }
    int word_length() const { return q_.size(); }
    const std::vector<Word>& words() const { return words_; }

    int index_of(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) throw DimensionError("word does not belong to this weight space");
        return it->second;
    }

private:
    MultisetQ q_;
    std::vector<Word> words_;
    std::map<Word, int> index_;
};

/// Matrix of a twisted group algebra element acting on the weight basis.
/// Column j accumulates, over the terms p_g * g of x, the coefficient
/// p_g evaluated at the permuted word g.j placed in row g.j. Distinct g
/// hitting the same target word sum (the degenerate case).
template <class F>
Matrix<typename F::Elem> operator_matrix(const TwistedElement& x, const WeightBasis& basis, const QSpec<F>& q,
                                         const F& field) {
    if (x.group_size() != basis.word_length())
        throw DimensionError("element degree does not match weight-space word length");
    const int dim = basis.dimension();
    Matrix<typename F::Elem> m(dim, dim, field.zero());
    for (const auto& [g, p] : x.terms()) {
        for (int col = 0; col < dim; ++col) {
            const Word& j = basis.words()[static_cast<std::size_t>(col)];
            const Word target = act_word(g, j);
            const int row = basis.index_of(target);
            m(row, col) = field.add(m(row, col), evaluate_at_word(p, q, target, field));
        }
    }
    return m;
}

/// Closed-form matrix of the starred cycle t*_{b,a}: column j has its only
/// entry at row t_{b,a}.j with value prod_{a <= i < b} q_{j_b j_i}.
/// T_{a,a} is the identity.
template <class F>
Matrix<typename F::Elem> t_matrix(int b, int a, const WeightBasis& basis, const QSpec<F>& q, const F& field) {
    const int n = basis.word_length();
    if (!(1 <= a && a <= b && b <= n)) throw ConfigError("t-matrix indices must satisfy 1 <= a <= b <= n");
    const int dim = basis.dimension();
    if (a == b) return identity_matrix(dim, field);
    Matrix<typename F::Elem> m(dim, dim, field.zero());
    const Permutation t = cycle(b, a, n);
    for (int col = 0; col < dim; ++col) {
        const Word& j = basis.words()[static_cast<std::size_t>(col)];
        typename F::Elem entry = field.one();
        for (int i = a; i < b; ++i)
            entry = field.mul(entry, q.at(j[static_cast<std::size_t>(b) - 1], j[static_cast<std::size_t>(i) - 1]));
        const int row = basis.index_of(act_word(t, j));
        m(row, col) = field.add(m(row, col), entry);
    }
    return m;
}

/// Matrix of the sum of all starred permutations, assembled directly from
/// inversion products: each g contributes prod_{(a,b) in I(g)} q_{j_b j_a}
/// at (g.j, j). Generic weight spaces get exactly one contribution per
/// entry; degenerate ones sum over all g joining the two words.
template <class F>
Matrix<typename F::Elem> a_matrix(const WeightBasis& basis, const QSpec<F>& q, const F& field) {
    const int n = basis.word_length();
    const int dim = basis.dimension();
    Matrix<typename F::Elem> m(dim, dim, field.zero());
    for (const Permutation& g : johnson_trotter(n)) {
        const auto inv = inversion_set(g);
        for (int col = 0; col < dim; ++col) {
            const Word& j = basis.words()[static_cast<std::size_t>(col)];
            typename F::Elem entry = field.one();
            for (auto [a, b] : inv)
                entry = field.mul(entry, q.at(j[static_cast<std::size_t>(b) - 1], j[static_cast<std::size_t>(a) - 1]));
            const int row = basis.index_of(act_word(g, j));
            m(row, col) = field.add(m(row, col), entry);
        }
    }
    return m;
}

/// Level matrix B_{Q,level} = sum_{k <= m <= n} T_{m,k} with k = n-level+1.
/// Level 1 is the identity; level n is the multidegree matrix.
template <class F>
Matrix<typename F::Elem> b_level_matrix(int level, const WeightBasis& basis, const QSpec<F>& q, const F& field) {
    const int n = basis.word_length();
    if (level < 1 || level > n) throw ConfigError("level out of range 1..n");
    const int k = n - level + 1;
    Matrix<typename F::Elem> m = identity_matrix(basis.dimension(), field);
    for (int mm = k + 1; mm <= n; ++mm) {
        auto t = t_matrix(mm, k, basis, q, field);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m(r, c) = field.add(m(r, c), t(r, c));
    }
    return m;
}

/// The two ordered products whose quotient recovers a level matrix:
///   C_level = (I - T_{n,k})(I - T_{n-1,k}) ... (I - T_{k+1,k})
///   D_level = (I - (T_k)^2 T_{n,k+1}) ... (I - (T_k)^2 T_{k+2,k+1}) (I - (T_k)^2)
/// with k = n-level+1. Satisfies B_level * C_level = D_level.
template <class F>
std::pair<Matrix<typename F::Elem>, Matrix<typename F::Elem>> cd_matrices(int level, const WeightBasis& basis,
                                                                          const QSpec<F>& q, const F& field) {
    const int n = basis.word_length();
    if (level < 2 || level > n) throw ConfigError("C/D level out of range 2..n");
    const int k = n - level + 1;
    const int dim = basis.dimension();
    const auto eye = identity_matrix(dim, field);

    Matrix<typename F::Elem> c = eye;
    for (int m = n; m >= k + 1; --m) c = mat_mul(c, mat_sub(eye, t_matrix(m, k, basis, q, field), field), field);

    const auto tk = t_matrix(k + 1, k, basis, q, field);
    const auto tk_sq = mat_mul(tk, tk, field);
    Matrix<typename F::Elem> d = eye;
    for (int m = n; m >= k + 1; --m) {
        auto factor = (m == k + 1) ? tk_sq : mat_mul(tk_sq, t_matrix(m, k + 1, basis, q, field), field);
        d = mat_mul(d, mat_sub(eye, factor, field), field);
    }
    return {std::move(c), std::move(d)};
}

/// Inverse-free factored form of the alpha matrix: the ordered product of
/// all level matrices B_{Q,1} B_{Q,2} ... B_{Q,n}.
template <class F>
Matrix<typename F::Elem> a_matrix_from_b_product(const WeightBasis& basis, const QSpec<F>& q, const F& field) {
    const int n = basis.word_length();
    Matrix<typename F::Elem> m = identity_matrix(basis.dimension(), field);
    for (int level = 1; level <= n; ++level) m = mat_mul(m, b_level_matrix(level, basis, q, field), field);
    return m;
}

/// Factored form through the C/D products: prod over levels 2..n of
/// D_level * C_level^{-1}. Requires every C_level invertible; returns
/// nullopt when one is singular.
template <class F>
std::optional<Matrix<typename F::Elem>> a_matrix_from_cd(const WeightBasis& basis, const QSpec<F>& q, const F& field) {
    const int n = basis.word_length();
    Matrix<typename F::Elem> m = identity_matrix(basis.dimension(), field);
    for (int level = 2; level <= n; ++level) {
        auto [c, d] = cd_matrices(level, basis, q, field);
        auto cinv = mat_inverse(std::move(c), field);
        if (!cinv) return std::nullopt;
        m = mat_mul(m, mat_mul(d, *cinv, field), field);
    }
    return m;
}

}  // namespace qalg
