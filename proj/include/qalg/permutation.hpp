#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "qalg/common.hpp"

namespace qalg {

/// Permutation of {1,...,n} in one-line notation. All positions and images
/// are 1-based throughout the library, matching the usual convention for
/// symmetric-group formulas; only the storage vector is 0-indexed.
class Permutation {
public:
    Permutation() = default;

    /// From 1-based images (img[i-1] = g(i)); validates the rearrangement.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }

    /// g(i) for 1-based i.
    int apply(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    int operator()(int i) const { return apply(i); }

    const std::vector<int>& one_line() const { return images_; }

    Permutation inverse() const;

    /// Composition (g * h)(x) = g(h(x)).
    friend Permutation operator*(const Permutation& g, const Permutation& h);

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// Inversion set I(g) = {(a,b) : a < b, g(a) > g(b)}, pairs in
/// lexicographic order.
std::vector<std::pair<int, int>> inversion_set(const Permutation& g);

/// The cyclic permutation sending a -> a+1, ..., b-1 -> b, b -> a and
/// fixing everything else. Requires 1 <= a <= b <= n; equal indices give
/// the identity.
Permutation cycle(int b, int a, int n);

/// Left cycle decomposition: returns (k_1,...,k_n) with k_j >= j and
/// g = cycle(k_n,n) * ... * cycle(k_1,1).
std::vector<int> cycle_decompose(const Permutation& g);

/// All n! permutations in plain-changes order: starts at the identity and
/// each neighbour differs by one adjacent transposition.
std::vector<Permutation> johnson_trotter(int n);

/// Parity sign (-1)^|I(g)|.
int permutation_sign(const Permutation& g);

std::string to_string(const Permutation& g);

}  // namespace qalg
