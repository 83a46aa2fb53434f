#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qalg/common.hpp"
#include "qalg/fields.hpp"

namespace qalg {

/// The deformation parameters: a table (i,j) -> q_{ij} over the labels in
/// use, with values in the field F. Zero values are allowed.
template <class F>
class QSpec {
public:
    using Elem = typename F::Elem;

    QSpec() = default;

    void set(int i, int j, Elem v) { table_[{i, j}] = std::move(v); }

    const Elem& at(int i, int j) const {
        auto it = table_.find({i, j});
        if (it == table_.end())
            throw ConfigError("missing q-parameter for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return it->second;
    }

    bool has(int i, int j) const { return table_.count({i, j}) > 0; }

    const std::map<std::pair<int, int>, Elem>& entries() const { return table_; }

private:
    std::map<std::pair<int, int>, Elem> table_;
};

/// q_{ij} = 1 for every pair of the given labels (the classical limit).
template <class F>
QSpec<F> qspec_ones(std::span<const int> labels, const F& field) {
    QSpec<F> q;
    for (int i : labels)
        for (int j : labels) q.set(i, j, field.one());
    return q;
}

template <class F>
QSpec<F> qspec_zeros(std::span<const int> labels, const F& field) {
    QSpec<F> q;
    for (int i : labels)
        for (int j : labels) q.set(i, j, field.zero());
    return q;
}

/// Seeded random parameters. Prime-field values are uniform in [0, p);
/// rational values have small numerator/denominator.
inline QSpec<PrimeField> qspec_random(std::span<const int> labels, const PrimeField& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, field.p - 1);
    QSpec<PrimeField> q;
    for (int i : labels)
        for (int j : labels) q.set(i, j, dist(rng));
    return q;
}

inline QSpec<RationalField> qspec_random(std::span<const int> labels, const RationalField&, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    QSpec<RationalField> q;
    for (int i : labels)
        for (int j : labels) q.set(i, j, Rational(num(rng), den(rng)));
    return q;
}

}  // namespace qalg
