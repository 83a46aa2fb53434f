#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qalg/representation.hpp"
#include "qalg/verify.hpp"

using namespace qalg;

namespace {

Polynomial var(int n, int a, int b) { return Polynomial::variable(n, VarIndex{a, b}); }

QSpec<RationalField> tagged_qspec(const std::vector<int>& labels) {
    RationalField f;
    QSpec<RationalField> q;
    for (int i : labels)
        for (int j : labels) q.set(i, j, Rational(100 * i + j, 3));
    return q;
}

}  // namespace

TEST_CASE("operator matrix trivial cases") {
    RationalField f;
    WeightBasis basis{MultisetQ({1, 2, 3})};
    auto q = tagged_qspec({1, 2, 3});

    CHECK(operator_matrix(TwistedElement::one(3), basis, q, f) == identity_matrix(basis.dimension(), f));

    // X_{a,b} id acts diagonally with entry q_{j_a j_b}.
    auto xab = TwistedElement::term(var(3, 1, 3), Permutation::identity(3));
    auto m = operator_matrix(xab, basis, q, f);
    for (int col = 0; col < basis.dimension(); ++col) {
        const Word& j = basis.words()[static_cast<std::size_t>(col)];
        for (int row = 0; row < basis.dimension(); ++row) {
            CHECK(m(row, col) == (row == col ? q.at(j[0], j[2]) : Rational(0)));
        }
    }

    CHECK_THROWS_AS(operator_matrix(TwistedElement::one(2), basis, q, f), DimensionError);
}

TEST_CASE("starred elements act by inversion products") {
    RationalField f;
    WeightBasis basis{MultisetQ({1, 2, 3})};
    auto q = tagged_qspec({1, 2, 3});
    for (const auto& g : johnson_trotter(3)) {
        auto m = operator_matrix(star(g), basis, q, f);
        for (int col = 0; col < basis.dimension(); ++col) {
            const Word& j = basis.words()[static_cast<std::size_t>(col)];
            Rational expect(1);
            for (auto [a, b] : inversion_set(g))
                expect *= q.at(j[static_cast<std::size_t>(b) - 1], j[static_cast<std::size_t>(a) - 1]);
            const int row = basis.index_of(act_word(g, j));
            for (int r = 0; r < basis.dimension(); ++r)
                CHECK(m(r, col) == (r == row ? expect : Rational(0)));
        }
    }
}

TEST_CASE("closed-form T matrix") {
    RationalField f;
    WeightBasis basis{MultisetQ({1, 2})};
    auto q = tagged_qspec({1, 2});
    CHECK(t_matrix(1, 1, basis, q, f) == identity_matrix(2, f));

    // Basis (e_12, e_21): T_{2,1} = [[0, q12], [q21, 0]]
    auto t = t_matrix(2, 1, basis, q, f);
    CHECK(t(0, 0) == 0);
    CHECK(t(0, 1) == q.at(1, 2));
    CHECK(t(1, 0) == q.at(2, 1));
    CHECK(t(1, 1) == 0);

    // (T_a)^2 is diagonal with sigma_{j_a j_{a+1}}.
    auto tsq = mat_mul(t, t, f);
    for (int col = 0; col < 2; ++col) {
        const Word& j = basis.words()[static_cast<std::size_t>(col)];
        CHECK(tsq(col, col) == q.at(j[0], j[1]) * q.at(j[1], j[0]));
        CHECK(tsq(1 - col, col) == 0);
    }

    CHECK_THROWS_AS(t_matrix(3, 1, basis, q, f), ConfigError);
}

TEST_CASE("alpha matrix small cases") {
    RationalField f;
    {
        WeightBasis basis{MultisetQ({1, 2})};
        auto q = tagged_qspec({1, 2});
        auto a = a_matrix(basis, q, f);
        CHECK(a(0, 0) == 1);
        CHECK(a(0, 1) == q.at(1, 2));
        CHECK(a(1, 0) == q.at(2, 1));
        CHECK(a(1, 1) == 1);
    }
    {
        WeightBasis basis{MultisetQ({1, 1})};
        auto q = tagged_qspec({1});
        auto a = a_matrix(basis, q, f);
        REQUIRE(a.rows() == 1);
        CHECK(a(0, 0) == Rational(1) + q.at(1, 1));
    }
    {
        WeightBasis basis{MultisetQ({9})};
        auto q = tagged_qspec({9});
        auto a = a_matrix(basis, q, f);
        REQUIRE(a.rows() == 1);
        CHECK(a(0, 0) == 1);
    }
}

TEST_CASE("level matrices") {
    RationalField f;
    WeightBasis basis{MultisetQ({1, 2})};
    auto q = tagged_qspec({1, 2});
    CHECK(b_level_matrix(1, basis, q, f) == identity_matrix(2, f));
    CHECK(b_level_matrix(2, basis, q, f) == multidegree_matrix(MultisetQ({1, 2}), q, f));
    CHECK_THROWS_AS(b_level_matrix(3, basis, q, f), ConfigError);

    WeightBasis basis3{MultisetQ({1, 2, 3})};
    auto q3 = tagged_qspec({1, 2, 3});
    CHECK(b_level_matrix(3, basis3, q3, f) == multidegree_matrix(MultisetQ({1, 2, 3}), q3, f));

    // Degenerate weight space: same identity.
    WeightBasis basisDeg{MultisetQ({1, 1, 2})};
    auto qd = tagged_qspec({1, 2});
    CHECK(b_level_matrix(3, basisDeg, qd, f) == multidegree_matrix(MultisetQ({1, 1, 2}), qd, f));
}

TEST_CASE("C and D products") {
    RationalField f;
    {
        WeightBasis basis{MultisetQ({1, 2})};
        auto q = tagged_qspec({1, 2});
        auto [c, d] = cd_matrices(2, basis, q, f);
        auto eye = identity_matrix(2, f);
        CHECK(c == mat_sub(eye, t_matrix(2, 1, basis, q, f), f));
        auto t = t_matrix(2, 1, basis, q, f);
        CHECK(d == mat_sub(eye, mat_mul(t, t, f), f));
        CHECK(mat_mul(b_level_matrix(2, basis, q, f), c, f) == d);
    }
    {
        // Degenerate scalar case: C = [1-q11], D = [1-q11^2], B = [1+q11].
        WeightBasis basis{MultisetQ({1, 1})};
        RationalField f2;
        QSpec<RationalField> q;
        q.set(1, 1, Rational(5, 3));
        auto [c, d] = cd_matrices(2, basis, q, f2);
        CHECK(c(0, 0) == Rational(1) - Rational(5, 3));
        CHECK(d(0, 0) == Rational(1) - Rational(25, 9));
        auto b = b_level_matrix(2, basis, q, f2);
        CHECK(b(0, 0) == Rational(1) + Rational(5, 3));
        CHECK(mat_mul(b, c, f2) == d);
    }
    {
        // B C = D over a prime field at n = 3, random parameters.
        PrimeField fp;
        std::vector<int> labels{1, 2, 3};
        auto q = qspec_random(std::span<const int>(labels), fp, 4);
        WeightBasis basis{MultisetQ(labels)};
        for (int level = 2; level <= 3; ++level) {
            auto [c, d] = cd_matrices(level, basis, q, fp);
            CHECK(mat_mul(b_level_matrix(level, basis, q, fp), c, fp) == d);
        }
    }
}

TEST_CASE("factored forms of the alpha matrix") {
    {
        RationalField f;
        WeightBasis basis{MultisetQ({1, 2})};
        auto q = tagged_qspec({1, 2});
        CHECK(a_matrix_from_b_product(basis, q, f) == a_matrix(basis, q, f));
    }
    {
        PrimeField fp;
        std::vector<int> labels{1, 2, 3};
        auto q = qspec_random(std::span<const int>(labels), fp, 12);
        WeightBasis basis{MultisetQ(labels)};
        auto direct = a_matrix(basis, q, fp);
        CHECK(a_matrix_from_b_product(basis, q, fp) == direct);
        auto via_cd = a_matrix_from_cd(basis, q, fp);
        REQUIRE(via_cd.has_value());
        CHECK(*via_cd == direct);
    }
    {
        RationalField f;
        WeightBasis basis{MultisetQ({1})};
        auto q = tagged_qspec({1});
        auto a = a_matrix_from_b_product(basis, q, f);
        REQUIRE(a.rows() == 1);
        CHECK(a(0, 0) == 1);
    }
}

TEST_CASE("representation suite passes") {
    PrimeField fp;
    for (int n = 2; n <= 4; ++n) {
        auto results = verify_representation(n, fp, 1234 + static_cast<std::uint64_t>(n), 60);
        for (const auto& r : results) {
            INFO(r.name, ": ", r.detail);
            CHECK(r.passed);
        }
    }
    // Rational field spot-check at n = 3.
    RationalField f;
    auto results = verify_representation(3, f, 99, 25);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.passed);
    }

    auto injected = verify_representation(2, fp, 5, 10, true);
    CHECK_FALSE(all_passed(injected));
}
