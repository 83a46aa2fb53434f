#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qalg/common.hpp"

namespace qalg {

/// Dense row-major matrix over arbitrary element type. Field arithmetic is
/// supplied by the caller, so the same container serves exact rationals and
/// prime-field residues.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

template <class F>
Matrix<typename F::Elem> identity_matrix(int n, const F& field) {
    Matrix<typename F::Elem> m(n, n, field.zero());
    for (int i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

template <class F>
Matrix<typename F::Elem> mat_mul(const Matrix<typename F::Elem>& a, const Matrix<typename F::Elem>& b, const F& field) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    Matrix<typename F::Elem> out(a.rows(), b.cols(), field.zero());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (field.is_zero(aik)) continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
        }
    }
    return out;
}

template <class F>
Matrix<typename F::Elem> mat_sub(const Matrix<typename F::Elem>& a, const Matrix<typename F::Elem>& b, const F& field) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference shape mismatch");
    Matrix<typename F::Elem> out(a.rows(), a.cols(), field.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = field.sub(a(i, j), b(i, j));
    return out;
}

template <class F>
std::vector<typename F::Elem> mat_apply(const Matrix<typename F::Elem>& a, const std::vector<typename F::Elem>& v, const F& field) {
    if (a.cols() != static_cast<int>(v.size())) throw DimensionError("matrix-vector shape mismatch");
    std::vector<typename F::Elem> out(static_cast<std::size_t>(a.rows()), field.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out[static_cast<std::size_t>(i)] = field.add(out[static_cast<std::size_t>(i)], field.mul(a(i, j), v[static_cast<std::size_t>(j)]));
    return out;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <class F>
std::optional<Matrix<typename F::Elem>> mat_inverse(Matrix<typename F::Elem> a, const F& field) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    const int n = a.rows();
    auto inv = identity_matrix(n, field);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!field.is_zero(a(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const auto scale = field.inv(a(col, col));
        for (int j = 0; j < n; ++j) {
            a(col, j) = field.mul(a(col, j), scale);
            inv(col, j) = field.mul(inv(col, j), scale);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || field.is_zero(a(r, col))) continue;
            const auto factor = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) = field.sub(a(r, j), field.mul(factor, a(col, j)));
                inv(r, j) = field.sub(inv(r, j), field.mul(factor, inv(col, j)));
            }
        }
    }
    return inv;
}

template <class F>
bool mat_is_zero(const Matrix<typename F::Elem>& a, const F& field) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!field.is_zero(a(i, j))) return false;
    return true;
}

}  // namespace qalg
