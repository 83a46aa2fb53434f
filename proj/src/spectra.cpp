#include "qalg/spectra.hpp"

namespace qalg {

std::vector<std::vector<int>> label_subsets(const std::vector<int>& labels, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > static_cast<int>(labels.size())) return out;
    std::vector<int> pick;
    // Depth-first lexicographic enumeration.
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == m) {
            out.push_back(pick);
            return;
        }
        for (std::size_t i = start; i < labels.size(); ++i) {
            pick.push_back(labels[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::uint64_t factorial_u64(int n) {
    if (n < 0) throw ConfigError("factorial of negative argument");
    if (n > 20) throw ConfigError("factorial exceeds 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::string FactoredDeterminant::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += " * ";
        s += "(1 - sigma{";
        for (std::size_t i = 0; i < f.subset.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f.subset[i]);
        }
        s += "})";
        if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
    }
    return s;
}

FactoredDeterminant closed_form_determinant(ClosedFormKind kind, const MultisetQ& Q, int b, int a, int k) {
    if (!Q.is_generic())
        throw ConfigError("closed-form determinants are stated for generic (all distinct) label sets only");
    const int n = Q.size();
    const auto& labels = Q.labels();
    FactoredDeterminant det;
    auto push_all = [&](int size, std::uint64_t exponent) {
        if (exponent == 0) return;
        for (auto& T : label_subsets(labels, size)) det.factors.push_back({T, exponent});
    };
    switch (kind) {
        case ClosedFormKind::lemma_i: {
            if (!(1 <= a && a < b && b <= n)) throw ConfigError("lemma_i requires 1 <= a < b <= n");
            push_all(b - a + 1, factorial_u64(b - a) * factorial_u64(n - b + a - 1));
            break;
        }
        case ClosedFormKind::lemma_ii: {
            if (!(1 < a && a <= b && b <= n)) throw ConfigError("lemma_ii requires 1 < a <= b <= n");
            push_all(b - a + 2,
                     factorial_u64(b - a) * static_cast<std::uint64_t>(b - a + 2) * factorial_u64(n - b + a - 2));
            break;
        }
        case ClosedFormKind::theorem_i: {
            for (int m = 2; m <= n; ++m) push_all(m, factorial_u64(m - 2) * factorial_u64(n - m + 1));
            break;
        }
        case ClosedFormKind::theorem_ii: {
            if (!(1 <= k && k <= n - 1)) throw ConfigError("theorem_ii requires 1 <= k <= n-1");
            for (int m = 2; m <= n - k + 1; ++m) push_all(m, factorial_u64(m - 2) * factorial_u64(n - m));
            break;
        }
    }
    return det;
}

}  // namespace qalg
