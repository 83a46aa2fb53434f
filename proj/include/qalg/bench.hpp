#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qalg/representation.hpp"
#include "qalg/spectra.hpp"

namespace qalg {

/// Field adapter that counts multiplications, for the operation-count
/// columns of the benchmark report.
template <class F>
struct CountingField {
    using Elem = typename F::Elem;
    static constexpr bool fraction_free_det = F::fraction_free_det;

    const F* base;
    mutable std::uint64_t mults = 0;

    explicit CountingField(const F& f) : base(&f) {}

    Elem zero() const { return base->zero(); }
    Elem one() const { return base->one(); }
    Elem add(const Elem& a, const Elem& b) const { return base->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return base->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const {
        ++mults;
        return base->mul(a, b);
    }
    Elem neg(const Elem& a) const { return base->neg(a); }
    Elem inv(const Elem& a) const { return base->inv(a); }
    Elem div(const Elem& a, const Elem& b) const {
        ++mults;
        return base->div(a, b);
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(const Elem& a) const { return base->is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return base->eq(a, b); }
    Elem from_rational(const Rational& r) const { return base->from_rational(r); }
    Elem from_int(long long v) const { return base->from_int(v); }
    std::string to_string(const Elem& a) const { return base->to_string(a); }
    std::string describe() const { return base->describe(); }
};

struct BenchRow {
    int n = 0;
    int dimension = 0;
    double closed_seconds = 0;
    std::uint64_t closed_mults = 0;
    std::string closed_value;
    bool brute_completed = false;
    double brute_seconds = 0;        // elapsed, or the estimate when refused
    std::uint64_t brute_mults = 0;
    std::string brute_value;
    bool values_equal = false;
    std::string note;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Gaussian elimination determinant with a wall-clock deadline; nullopt on
/// expiry.
template <class F>
std::optional<typename F::Elem> determinant_with_deadline(Matrix<typename F::Elem> m, const F& field,
                                                          Clock::time_point deadline) {
    const int n = m.rows();
    typename F::Elem det = field.one();
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        if (Clock::now() > deadline) return std::nullopt;
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

}  // namespace detail

/// One brute-vs-closed determinant comparison of the full starred-sum
/// matrix on the generic weight space of {1..n}. The brute side (matrix
/// construction plus elimination) is refused up front when a cubic
/// extrapolation from a smaller instance predicts it will blow the budget,
/// and hard-aborted at the deadline otherwise.
inline BenchRow bench_determinant(int n, const PrimeField& field, std::uint64_t seed, double budget_seconds) {
    BenchRow row;
    row.n = n;
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    MultisetQ Q(labels);
    auto q = qspec_random(labels, field, seed);

    row.dimension = 1;
    for (int i = 2; i <= n; ++i) row.dimension *= i;

    {
        CountingField<PrimeField> cf(field);
        QSpec<CountingField<PrimeField>> qc;
        for (const auto& [key, value] : q.entries()) qc.set(key.first, key.second, value);
        const auto start = detail::Clock::now();
        auto closed = closed_form_determinant(ClosedFormKind::theorem_i, Q);
        auto value = closed.evaluate(qc, cf);
        row.closed_seconds = detail::seconds_since(start);
        row.closed_mults = cf.mults;
        row.closed_value = field.to_string(value);
    }

    // Calibrate elimination throughput on a smaller instance and
    // extrapolate with the cubic cost model.
    double estimate = 0;
    if (n > 5) {
        const int cal_n = 5;
        BenchRow cal = bench_determinant(cal_n, field, seed, 1e9);
        const double dim_ratio = static_cast<double>(row.dimension) / cal.dimension;
        estimate = cal.brute_seconds * dim_ratio * dim_ratio * dim_ratio;
        if (estimate > budget_seconds) {
            row.brute_completed = false;
            row.brute_seconds = estimate;
            row.note = "infeasible: estimated " + std::to_string(estimate) + "s exceeds budget of " +
                       std::to_string(budget_seconds) + "s";
            return row;
        }
    }

    CountingField<PrimeField> cf(field);
    QSpec<CountingField<PrimeField>> qc;
    for (const auto& [key, value] : q.entries()) qc.set(key.first, key.second, value);
    const auto start = detail::Clock::now();
    const auto deadline = start + std::chrono::duration_cast<detail::Clock::duration>(
                                      std::chrono::duration<double>(budget_seconds));
    WeightBasis basis(Q);
    auto matrix = a_matrix(basis, qc, cf);
    auto value = detail::determinant_with_deadline(std::move(matrix), cf, deadline);
    row.brute_seconds = detail::seconds_since(start);
    row.brute_mults = cf.mults;
    if (!value) {
        row.brute_completed = false;
        row.note = "infeasible: aborted after " + std::to_string(row.brute_seconds) + "s (budget " +
                   std::to_string(budget_seconds) + "s)";
        return row;
    }
    row.brute_completed = true;
    row.brute_value = field.to_string(*value);
    row.values_equal = row.brute_value == row.closed_value;
    return row;
}

}  // namespace qalg
