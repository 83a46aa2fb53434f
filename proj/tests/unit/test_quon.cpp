#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qalg/quon.hpp"
#include "qalg/representation.hpp"

using namespace qalg;

namespace {

// Test-only oracle: the derivative straight from its recursive definition
//   d_i(1) = 0, d_i(e_j x) = delta_ij x + q_ij e_j d_i(x),
// independent of the closed one-pass formula used by the implementation.
template <class F>
WeightVector<F> derivative_recursive(int label, const Word& w, const QSpec<F>& q, const F& field) {
    WeightVector<F> out;
    if (w.empty()) return out;
    const int head = w.front();
    Word tail(w.begin() + 1, w.end());
    if (head == label) wv_add_term(out, tail, field.one(), field);
    auto inner = derivative_recursive(label, tail, q, field);
    for (const auto& [word, c] : inner) {
        Word prefixed;
        prefixed.push_back(head);
        prefixed.insert(prefixed.end(), word.begin(), word.end());
        wv_add_term(out, prefixed, field.mul(q.at(label, head), c), field);
    }
    return out;
}

template <class F>
WeightVector<F> single(const Word& w, const F& field) {
    WeightVector<F> v;
    wv_add_term(v, w, field.one(), field);
    return v;
}

}  // namespace

TEST_CASE("q-integers") {
    RationalField f;
    Rational q(2);
    CHECK(q_integer(0, q, f) == 0);
    CHECK(q_integer(4, q, f) == 15);
    CHECK(q_integer(3, Rational(1), f) == 3);
    // [3]_q = 1 + q + q^2 at q = 5/7
    CHECK(q_integer(3, Rational(5, 7), f) == Rational(1) + Rational(5, 7) + Rational(25, 49));
}

TEST_CASE("derivative on basis monomials") {
    RationalField f;
    QSpec<RationalField> q;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) q.set(i, j, Rational(10 * i + j, 7));

    // d_1(e_2) = 0, d_1(e_1) = empty word
    CHECK(partial_derivative(1, single<RationalField>({2}, f), q, f).empty());
    auto d = partial_derivative(1, single<RationalField>({1}, f), q, f);
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == Word{});
    CHECK(d.begin()->second == 1);

    // d_1(e_1 e_2 e_1) = e_{21} + q_11 q_12 e_{12}
    auto d2 = partial_derivative(1, single<RationalField>({1, 2, 1}, f), q, f);
    REQUIRE(d2.size() == 2);
    CHECK(d2.at(Word{2, 1}) == 1);
    CHECK(d2.at(Word{1, 2}) == q.at(1, 1) * q.at(1, 2));

    // Empty word and absent labels vanish.
    CHECK(partial_derivative(1, single<RationalField>({}, f), q, f).empty());
    CHECK(partial_derivative(9, single<RationalField>({1, 2}, f), q, f).empty());
}

TEST_CASE("derivative of a pure power is a q-integer multiple") {
    RationalField f;
    QSpec<RationalField> q;
    q.set(4, 4, Rational(3, 5));
    for (int n = 1; n <= 8; ++n) {
        Word w(static_cast<std::size_t>(n), 4);
        auto d = partial_derivative(4, single<RationalField>(w, f), q, f);
        REQUIRE(d.size() == 1);
        Word expect(static_cast<std::size_t>(n - 1), 4);
        CHECK(d.begin()->first == expect);
        CHECK(d.begin()->second == q_integer(static_cast<std::uint64_t>(n), Rational(3, 5), f));
    }
}

TEST_CASE("closed formula matches the recursive definition") {
    std::mt19937_64 rng(17);
    RationalField f;
    std::vector<int> labels{1, 2, 3};
    auto q = qspec_random(std::span<const int>(labels), f, 42);
    for (int trial = 0; trial < 400; ++trial) {
        const int len = static_cast<int>(rng() % 6);
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(labels[rng() % labels.size()]);
        const int label = labels[rng() % labels.size()];
        CHECK(partial_derivative(label, single<RationalField>(w, f), q, f) ==
              derivative_recursive(label, w, q, f));
    }
}

TEST_CASE("twisted Leibniz rule") {
    std::mt19937_64 rng(19);
    RationalField f;
    std::vector<int> labels{1, 2, 3, 4};
    auto q = qspec_random(std::span<const int>(labels), f, 77);
    for (int trial = 0; trial < 500; ++trial) {
        const int lx = static_cast<int>(rng() % 5), ly = static_cast<int>(rng() % 5);
        Word x, y;
        for (int i = 0; i < lx; ++i) x.push_back(labels[rng() % labels.size()]);
        for (int i = 0; i < ly; ++i) y.push_back(labels[rng() % labels.size()]);
        const int label = labels[rng() % labels.size()];

        auto xv = single<RationalField>(x, f), yv = single<RationalField>(y, f);
        auto lhs = partial_derivative(label, wv_concat(xv, yv, f), q, f);
        // d_i(x) y + q_{i l_1} ... q_{i l_m} x d_i(y), the q's over x's letters
        auto rhs = wv_concat(partial_derivative(label, xv, q, f), yv, f);
        Rational scale(1);
        for (int l : x) scale *= q.at(label, l);
        rhs = wv_add(rhs, wv_scale(wv_concat(xv, partial_derivative(label, yv, q, f), f), scale, f), f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("derivative lowers the weight by one label") {
    RationalField f;
    std::vector<int> labels{1, 2, 3};
    auto q = qspec_random(std::span<const int>(labels), f, 5);
    MultisetQ Q({1, 2, 2, 3});
    for (const Word& w : multiset_words(Q)) {
        auto d = partial_derivative(2, single<RationalField>(w, f), q, f);
        MultisetQ expect({1, 2, 3});
        for (const auto& [word, c] : d) {
            CHECK(MultisetQ(word) == expect);
        }
        CHECK(!d.empty());
    }
}

TEST_CASE("multidegree matrix small cases") {
    RationalField f;
    QSpec<RationalField> q;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) q.set(i, j, Rational(10 * i + j));

    // Basis (e_12, e_21): columns [[1, q21], [q12, 1]]
    auto m = multidegree_matrix(MultisetQ({1, 2}), q, f);
    REQUIRE(m.rows() == 2);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 0) == q.at(2, 1));
    CHECK(m(0, 1) == q.at(1, 2));
    CHECK(m(1, 1) == 1);

    auto m11 = multidegree_matrix(MultisetQ({1, 1}), q, f);
    REQUIRE(m11.rows() == 1);
    CHECK(m11(0, 0) == Rational(1) + q.at(1, 1));

    auto m1 = multidegree_matrix(MultisetQ({7}), qspec_ones(std::vector<int>{7}, f), f);
    REQUIRE(m1.rows() == 1);
    CHECK(m1(0, 0) == 1);
}

TEST_CASE("multidegree matrix equals the derivative assembly") {
    // Independent construction: column of e_j is sum_i e_i * d_i(e_j),
    // built from partial_derivative and concatenation.
    RationalField f;
    for (const auto& labels : {std::vector<int>{1, 2, 3}, std::vector<int>{1, 1, 2}, std::vector<int>{2, 2, 2}}) {
        MultisetQ Q(labels);
        auto support = Q.support();
        auto q = qspec_random(std::span<const int>(support), f, 91);
        WeightBasis basis{Q};
        auto direct = multidegree_matrix(Q, q, f);
        Matrix<Rational> assembled(basis.dimension(), basis.dimension(), Rational(0));
        for (int col = 0; col < basis.dimension(); ++col) {
            const Word& j = basis.words()[static_cast<std::size_t>(col)];
            WeightVector<RationalField> image;
            for (int i : support) {
                auto di = partial_derivative(i, single<RationalField>(j, f), q, f);
                image = wv_add(image, wv_concat(single<RationalField>({i}, f), di, f), f);
            }
            for (const auto& [word, c] : image) assembled(basis.index_of(word), col) = c;
        }
        CHECK(direct == assembled);
    }
}
