#include "qalg/verify.hpp"

namespace qalg {

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

namespace {

Polynomial pair_variable_poly(int n, int a, int b) {
    Monomial m;
    m[VarIndex{a, b}] += 1;
    m[VarIndex{b, a}] += 1;
    return Polynomial::monomial(n, m, 1);
}

}  // namespace

std::vector<CheckResult> verify_algebra(int n, bool inject_failure) {
    std::vector<CheckResult> out;
    const auto perms = johnson_trotter(n);

    {
        CheckResult r{"squared starred transpositions are scalars", true, ""};
        for (int k = 1; k + 1 <= n && r.passed; ++k) {
            auto tk = star(cycle(k + 1, k, n));
            auto expected = TwistedElement::term(pair_variable_poly(n, k, k + 1), Permutation::identity(n));
            if (!(tk * tk == expected)) {
                r.passed = false;
                r.detail = "k = " + std::to_string(k);
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"product rule for starred elements (all pairs)", true, ""};
        for (const auto& g1 : perms) {
            for (const auto& g2 : perms) {
                auto [primary, alt] = twist_factor_forms(g1, g2);
                if (!(primary == alt)) {
                    r.passed = false;
                    r.detail = "set descriptions differ at g1 = " + to_string(g1) + ", g2 = " + to_string(g2);
                    break;
                }
                auto lhs = star(g1) * star(g2);
                auto rhs = TwistedElement::term(primary, Permutation::identity(n)) * star(g1 * g2);
                if (!(lhs == rhs)) {
                    r.passed = false;
                    r.detail = "g1 = " + to_string(g1) + ", g2 = " + to_string(g2);
                    break;
                }
            }
            if (!r.passed) break;
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"starred sum factors through level sums", true, ""};
        TwistedElement product = TwistedElement::one(n);
        for (int level = 1; level <= n; ++level) product = product * beta_star(level, n);
        TwistedElement alpha = alpha_star(n);
        if (inject_failure) alpha += TwistedElement::group_element(Permutation::identity(n));
        if (!(alpha == product)) {
            r.passed = false;
            // Name the first permutation whose coefficient differs.
            for (const auto& g : perms) {
                auto ita = alpha.terms().find(g);
                auto itp = product.terms().find(g);
                const Polynomial* pa = ita == alpha.terms().end() ? nullptr : &ita->second;
                const Polynomial* pp = itp == product.terms().end() ? nullptr : &itp->second;
                if ((pa == nullptr) != (pp == nullptr) || (pa && pp && !(*pa == *pp))) {
                    r.detail = "coefficient of " + to_string(g) + ": " + (pa ? pa->str() : "0") + " vs " +
                               (pp ? pp->str() : "0");
                    break;
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        CheckResult r{"level sums satisfy beta gamma = delta", true, ""};
        for (int level = 2; level <= n && r.passed; ++level) {
            auto lhs = beta_star(level, n) * gamma_star(level, n);
            auto rhs = delta_star(level, n);
            if (!(lhs == rhs)) {
                r.passed = false;
                r.detail = "level " + std::to_string(level);
            }
        }
        out.push_back(std::move(r));
    }

    return out;
}

}  // namespace qalg
