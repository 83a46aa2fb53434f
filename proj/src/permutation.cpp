#include "qalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qalg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw DimensionError("one-line notation is not a rearrangement of 1..n");
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    Permutation g;
    g.images_ = std::move(img);
    return g;
}

Permutation Permutation::inverse() const {
    const int n = size();
    Permutation g;
    g.images_.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) g.images_[static_cast<std::size_t>(apply(i)) - 1] = i;
    return g;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.size() != h.size()) throw DimensionError("composing permutations of different degree");
    Permutation r;
    r.images_.resize(g.images_.size());
    for (int i = 1; i <= g.size(); ++i) r.images_[static_cast<std::size_t>(i) - 1] = g.apply(h.apply(i));
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& g) {
    std::vector<std::pair<int, int>> inv;
    const int n = g.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (g.apply(a) > g.apply(b)) inv.emplace_back(a, b);
    return inv;
}

Permutation cycle(int b, int a, int n) {
    if (!(1 <= a && a <= b && b <= n)) throw DimensionError("cycle indices must satisfy 1 <= a <= b <= n");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int i = a; i < b; ++i) img[static_cast<std::size_t>(i) - 1] = i + 1;
    img[static_cast<std::size_t>(b) - 1] = a;
    return Permutation(std::move(img));
}

std::vector<int> cycle_decompose(const Permutation& g) {
    const int n = g.size();
    std::vector<int> k(static_cast<std::size_t>(n));
    Permutation rest = g;
    // Peel from the left: k_j is where the residual sends j back to, and
    // multiplying by the inverse cycle makes the residual fix 1..j.
    for (int j = 1; j <= n; ++j) {
        int kj = rest.inverse().apply(j);
        k[static_cast<std::size_t>(j) - 1] = kj;
        rest = rest * cycle(kj, j, n).inverse();
    }
    return k;
}

std::vector<Permutation> johnson_trotter(int n) {
    std::vector<Permutation> out;
    if (n == 0) {
        out.push_back(Permutation::identity(0));
        return out;
    }
    std::vector<int> val(static_cast<std::size_t>(n));
    std::iota(val.begin(), val.end(), 1);
    std::vector<int> dir(static_cast<std::size_t>(n), -1);  // -1 left, +1 right
    out.push_back(Permutation(val));
    while (true) {
        // Largest mobile value: one whose arrow points at a smaller neighbour.
        int mobile_pos = -1, mobile_val = 0;
        for (int i = 0; i < n; ++i) {
            int j = i + dir[static_cast<std::size_t>(val[static_cast<std::size_t>(i)] - 1)];
            if (j < 0 || j >= n) continue;
            if (val[static_cast<std::size_t>(j)] < val[static_cast<std::size_t>(i)] &&
                val[static_cast<std::size_t>(i)] > mobile_val) {
                mobile_val = val[static_cast<std::size_t>(i)];
                mobile_pos = i;
            }
        }
        if (mobile_pos < 0) break;
        int swap_with = mobile_pos + dir[static_cast<std::size_t>(mobile_val - 1)];
        std::swap(val[static_cast<std::size_t>(mobile_pos)], val[static_cast<std::size_t>(swap_with)]);
        for (int v = mobile_val + 1; v <= n; ++v) dir[static_cast<std::size_t>(v - 1)] *= -1;
        out.push_back(Permutation(val));
    }
    return out;
}

int permutation_sign(const Permutation& g) {
    return inversion_set(g).size() % 2 == 0 ? 1 : -1;
}

std::string to_string(const Permutation& g) {
    std::string s = "[";
    for (int i = 1; i <= g.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(g.apply(i));
    }
    return s + "]";
}

}  // namespace qalg
