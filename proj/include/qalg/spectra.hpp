#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qalg/matrix.hpp"
#include "qalg/qspec.hpp"
#include "qalg/quon.hpp"
#include "qalg/representation.hpp"

namespace qalg {

/// Product of q_{ij} over all ordered pairs of distinct labels in T
/// (equivalently, the product of sigma_{ij} = q_{ij} q_{ji} over unordered
/// pairs). Requires at least two distinct labels.
template <class F>
typename F::Elem sigma_subset(const std::vector<int>& T, const QSpec<F>& q, const F& field) {
    if (T.size() < 2) throw ConfigError("sigma requires a subset with at least 2 labels");
    typename F::Elem prod = field.one();
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = 0; j < T.size(); ++j)
            if (i != j) prod = field.mul(prod, q.at(T[i], T[j]));
    return prod;
}

/// All size-m subsets of the given labels, in lexicographic order.
std::vector<std::vector<int>> label_subsets(const std::vector<int>& labels, int m);

std::uint64_t factorial_u64(int n);

/// A determinant in the factored shape prod_T (1 - sigma_T)^e_T.
struct FactoredDeterminant {
    struct Factor {
        std::vector<int> subset;
        std::uint64_t exponent;
    };
    std::vector<Factor> factors;

    template <class F>
    typename F::Elem evaluate(const QSpec<F>& q, const F& field) const {
        typename F::Elem value = field.one();
        for (const auto& f : factors) {
            auto base = field.sub(field.one(), sigma_subset(f.subset, q, field));
            value = field.mul(value, field.pow(base, f.exponent));
        }
        return value;
    }

    std::string str() const;
};

/// Which closed-form determinant to build. The lemma kinds take the cycle
/// indices (b,a); the theorem kinds cover the alpha matrix and the level
/// matrices.
enum class ClosedFormKind { lemma_i, lemma_ii, theorem_i, theorem_ii };

/// Symbolic factored determinants over a generic (all labels distinct) Q:
///   lemma_i    det(I - T_{b,a}),                subsets of size b-a+1,
///              exponent (b-a)! (n-b+a-1)!       (1 <= a < b <= n)
///   lemma_ii   det(I - (T_{a-1})^2 T_{b,a}),    subsets of size b-a+2,
///              exponent (b-a)! (b-a+2) (n-b+a-2)!   (1 < a <= b <= n)
///   theorem_i  det A_Q, subsets of size m = 2..n, exponent (m-2)! (n-m+1)!
///   theorem_ii det B_{Q,n-k+1}, subsets of size m = 2..n-k+1,
///              exponent (m-2)! (n-m)!            (1 <= k <= n-1)
/// theorem_ii with k = 1 extends the stated range to the full multidegree
/// matrix; it is cross-checked numerically like everything else.
/// Degenerate Q is refused.
FactoredDeterminant closed_form_determinant(ClosedFormKind kind, const MultisetQ& Q, int b = 0, int a = 0, int k = 0);

/// Exact determinant. Rationals use fraction-free (Bareiss) elimination,
/// prime fields ordinary Gaussian elimination.
template <class F>
typename F::Elem determinant(Matrix<typename F::Elem> m, const F& field) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return field.one();
    bool negate = false;
    if constexpr (F::fraction_free_det) {
        typename F::Elem prev = field.one();
        for (int col = 0; col < n - 1; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (!field.is_zero(m(r, col))) { pivot = r; break; }
            if (pivot < 0) return field.zero();
            if (pivot != col) {
                for (int j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
                negate = !negate;
            }
            for (int r = col + 1; r < n; ++r) {
                for (int j = col + 1; j < n; ++j) {
                    auto num = field.sub(field.mul(m(r, j), m(col, col)), field.mul(m(r, col), m(col, j)));
                    m(r, j) = field.div(num, prev);
                }
                m(r, col) = field.zero();
            }
            prev = m(col, col);
        }
        auto det = m(n - 1, n - 1);
        return negate ? field.neg(det) : det;
    } else {
        typename F::Elem det = field.one();
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (!field.is_zero(m(r, col))) { pivot = r; break; }
            if (pivot < 0) return field.zero();
            if (pivot != col) {
                for (int j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
                negate = !negate;
            }
            det = field.mul(det, m(col, col));
            const auto inv_pivot = field.inv(m(col, col));
            for (int r = col + 1; r < n; ++r) {
                if (field.is_zero(m(r, col))) continue;
                const auto factor = field.mul(m(r, col), inv_pivot);
                for (int j = col + 1; j < n; ++j) m(r, j) = field.sub(m(r, j), field.mul(factor, m(col, j)));
                m(r, col) = field.zero();
            }
        }
        return negate ? field.neg(det) : det;
    }
}

/// Basis of the nullspace as coordinate vectors (RREF back-substitution,
/// one vector per free column, free coordinate normalized to 1).
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(Matrix<typename F::Elem> m, const F& field) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!field.is_zero(m(r, col))) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        const auto scale = field.inv(m(rank, col));
        for (int j = 0; j < cols; ++j) m(rank, j) = field.mul(m(rank, j), scale);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || field.is_zero(m(r, col))) continue;
            const auto factor = m(r, col);
            for (int j = 0; j < cols; ++j) m(r, j) = field.sub(m(r, j), field.mul(factor, m(rank, j)));
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<typename F::Elem>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<typename F::Elem> v(static_cast<std::size_t>(cols), field.zero());
        v[static_cast<std::size_t>(free)] = field.one();
        for (int r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] = field.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Kernel of the multidegree matrix as weight vectors over the basis of Q.
template <class F>
std::vector<WeightVector<F>> constants_basis(const MultisetQ& Q, const QSpec<F>& q, const F& field) {
    WeightBasis basis(Q);
    auto coords = kernel_basis(multidegree_matrix(Q, q, field), field);
    std::vector<WeightVector<F>> out;
    for (const auto& v : coords) {
        WeightVector<F> wv;
        for (int i = 0; i < basis.dimension(); ++i)
            wv_add_term(wv, basis.words()[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)], field);
        out.push_back(std::move(wv));
    }
    return out;
}

/// Report for one parameter point: which subsets sit at sigma_T = 1, what
/// vanishing order the factored determinant predicts for each, and the
/// measured kernel dimension of the multidegree matrix.
struct SingularReport {
    struct Hit {
        std::vector<int> subset;
        std::uint64_t predicted_exponent;  // contribution to the vanishing order of det B_Q
    };
    std::vector<Hit> hits;
    bool det_is_zero = false;
    int kernel_dimension = 0;
};

template <class F>
SingularReport singular_scan(const MultisetQ& Q, const QSpec<F>& q, const F& field) {
    if (!Q.is_generic()) throw ConfigError("singular scan requires a generic (all distinct) label set");
    const int n = Q.size();
    SingularReport report;
    for (int m = 2; m <= n; ++m) {
        const std::uint64_t exponent = factorial_u64(m - 2) * factorial_u64(n - m);
        for (auto& T : label_subsets(Q.labels(), m)) {
            if (field.eq(sigma_subset(T, q, field), field.one()))
                report.hits.push_back({T, exponent});
        }
    }
    auto bq = multidegree_matrix(Q, q, field);
    report.det_is_zero = field.is_zero(determinant(bq, field));
    report.kernel_dimension = static_cast<int>(kernel_basis(std::move(bq), field).size());
    return report;
}

}  // namespace qalg
