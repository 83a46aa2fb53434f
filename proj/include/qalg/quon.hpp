#pragma once

#include <cstdint>
#include <map>

#include "qalg/matrix.hpp"
#include "qalg/qspec.hpp"
#include "qalg/word.hpp"

namespace qalg {

/// q-analogue of a natural number: [n]_q = 1 + q + ... + q^{n-1}.
template <class F>
typename F::Elem q_integer(std::uint64_t n, const typename F::Elem& q, const F& field) {
    typename F::Elem sum = field.zero();
    typename F::Elem power = field.one();
    for (std::uint64_t i = 0; i < n; ++i) {
        sum = field.add(sum, power);
        power = field.mul(power, q);
    }
    return sum;
}

/// Sparse linear combination of basis monomials e_{j_1...j_n}, keyed by
/// word. Zero coefficients are dropped eagerly, so map equality is equality
/// in the algebra. Words of different weights may coexist (products live in
/// the full graded algebra); the weight-space ops below keep them separate.
template <class F>
using WeightVector = std::map<Word, typename F::Elem>;

template <class F>
void wv_add_term(WeightVector<F>& v, const Word& w, const typename F::Elem& c, const F& field) {
    if (field.is_zero(c)) return;
    auto [it, inserted] = v.try_emplace(w, c);
    if (!inserted) {
        it->second = field.add(it->second, c);
        if (field.is_zero(it->second)) v.erase(it);
    }
}

template <class F>
WeightVector<F> wv_add(const WeightVector<F>& x, const WeightVector<F>& y, const F& field) {
    WeightVector<F> out = x;
    for (const auto& [w, c] : y) wv_add_term(out, w, c, field);
    return out;
}

template <class F>
WeightVector<F> wv_scale(const WeightVector<F>& x, const typename F::Elem& s, const F& field) {
    WeightVector<F> out;
    for (const auto& [w, c] : x) wv_add_term(out, w, field.mul(c, s), field);
    return out;
}

/// Product in the free algebra: concatenation of basis words, extended
/// bilinearly.
template <class F>
WeightVector<F> wv_concat(const WeightVector<F>& x, const WeightVector<F>& y, const F& field) {
    WeightVector<F> out;
    for (const auto& [wx, cx] : x) {
        for (const auto& [wy, cy] : y) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            wv_add_term(out, w, field.mul(cx, cy), field);
        }
    }
    return out;
}

/// The deformed partial derivative in direction of label i:
///   d_i(e_{j_1...j_n}) = sum over positions k with j_k = i of
///   q_{i j_1} ... q_{i j_{k-1}} e_{j_1...^j_k...j_n},
/// extended linearly. Labels absent from a word contribute nothing, and the
/// empty word maps to zero.
template <class F>
WeightVector<F> partial_derivative(int label, const WeightVector<F>& v, const QSpec<F>& q, const F& field) {
    WeightVector<F> out;
    for (const auto& [w, c] : v) {
        std::size_t last = w.size();
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] == label) last = k;
        if (last == w.size()) continue;  // label absent: contributes zero
        typename F::Elem prefix = field.one();
        for (std::size_t k = 0; k <= last; ++k) {
            if (w[k] == label) {
                Word rest;
                rest.reserve(w.size() - 1);
                rest.insert(rest.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
                rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
                wv_add_term(out, rest, field.mul(c, prefix), field);
            }
            if (k < last) prefix = field.mul(prefix, q.at(label, w[k]));
        }
    }
    return out;
}

/// Matrix of the multidegree operator sum_i e_i d_i restricted to the
/// weight space of Q, in the multiset_words basis. Column j holds the
/// expansion
///   e_{j_1...j_n} -> sum_k q_{j_k j_1} ... q_{j_k j_{k-1}}
///                    e_{j_k j_1 ...^j_k... j_n}.
template <class F>
Matrix<typename F::Elem> multidegree_matrix(const MultisetQ& Q, const QSpec<F>& q, const F& field) {
    const std::vector<Word> words = multiset_words(Q);
    std::map<Word, int> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
    const int dim = static_cast<int>(words.size());
    Matrix<typename F::Elem> m(dim, dim, field.zero());
    for (int col = 0; col < dim; ++col) {
        const Word& j = words[static_cast<std::size_t>(col)];
        for (std::size_t k = 0; k < j.size(); ++k) {
            typename F::Elem coeff = field.one();
            for (std::size_t t = 0; t < k; ++t) coeff = field.mul(coeff, q.at(j[k], j[t]));
            Word target;
            target.reserve(j.size());
            target.push_back(j[k]);
            for (std::size_t t = 0; t < j.size(); ++t)
                if (t != k) target.push_back(j[t]);
            const int row = index.at(target);
            m(row, col) = field.add(m(row, col), coeff);
        }
    }
    return m;
}

}  // namespace qalg
