#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "qalg/permutation.hpp"
#include "qalg/word.hpp"

using namespace qalg;

TEST_CASE("group operations") {
    CHECK(Permutation::identity(4).inverse() == Permutation::identity(4));
    Permutation swap12({2, 1, 3});
    CHECK(swap12 * swap12 == Permutation::identity(3));
    CHECK(Permutation({2, 3, 1}).inverse() == Permutation({3, 1, 2}));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DimensionError);
    CHECK_THROWS_AS(Permutation({2, 1}) * Permutation({1, 2, 3}), DimensionError);

    // (g h)(x) = g(h(x))
    Permutation g({3, 1, 2}), h({2, 3, 1});
    for (int x = 1; x <= 3; ++x) CHECK((g * h).apply(x) == g.apply(h.apply(x)));
}

TEST_CASE("inversion sets") {
    CHECK(inversion_set(Permutation::identity(3)).empty());
    CHECK(inversion_set(Permutation({3, 2, 1})) ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(inversion_set(Permutation({2, 3, 1})) == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
    CHECK(inversion_set(Permutation({2, 3, 1}).inverse()) ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
}

TEST_CASE("cyclic permutations") {
    CHECK(cycle(1, 1, 3) == Permutation::identity(3));
    CHECK(cycle(3, 1, 3) == Permutation({2, 3, 1}));
    CHECK(cycle(3, 2, 3) == Permutation({1, 3, 2}));
    CHECK_THROWS_AS(cycle(1, 2, 3), DimensionError);
    CHECK_THROWS_AS(cycle(4, 1, 3), DimensionError);
}

TEST_CASE("left cycle decomposition") {
    CHECK(cycle_decompose(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(cycle_decompose(Permutation({3, 1, 2})) == std::vector<int>{2, 3, 3});

    // Oracle: recompose g = t_{k_n,n} ... t_{k_1,1} and compare. Exhaustive
    // through n = 5, sampled at n = 6.
    auto recompose = [](const std::vector<int>& k, int n) {
        Permutation g = Permutation::identity(n);
        for (int j = n; j >= 1; --j) g = g * cycle(k[static_cast<std::size_t>(j) - 1], j, n);
        return g;
    };
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : johnson_trotter(n)) {
            auto k = cycle_decompose(g);
            for (int j = 1; j <= n; ++j) CHECK(k[static_cast<std::size_t>(j) - 1] >= j);
            CHECK(recompose(k, n) == g);
        }
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> img(6);
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        Permutation g(img);
        CHECK(recompose(cycle_decompose(g), 6) == g);
    }
}

TEST_CASE("plain-changes enumeration") {
    auto one_line_words = [](int n) {
        std::vector<std::vector<int>> v;
        for (const auto& g : johnson_trotter(n)) v.push_back(g.one_line());
        return v;
    };
    CHECK(one_line_words(1) == std::vector<std::vector<int>>{{1}});
    CHECK(one_line_words(3) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}, {3, 1, 2}, {3, 2, 1}, {2, 3, 1}, {2, 1, 3}});

    for (int n = 0; n <= 7; ++n) {
        auto perms = johnson_trotter(n);
        std::uint64_t expected = 1;
        for (int i = 2; i <= n; ++i) expected *= static_cast<std::uint64_t>(i);
        CHECK(perms.size() == expected);
        CHECK(perms.front().is_identity());
        std::set<Permutation> distinct(perms.begin(), perms.end());
        CHECK(distinct.size() == perms.size());
        // Adjacent permutations differ by exactly one adjacent swap.
        for (std::size_t i = 1; i < perms.size(); ++i) {
            int diffs = 0, adjacent_swap = 0;
            for (int p = 1; p <= n; ++p) {
                if (perms[i].apply(p) != perms[i - 1].apply(p)) ++diffs;
                if (p < n && perms[i].apply(p) == perms[i - 1].apply(p + 1) &&
                    perms[i].apply(p + 1) == perms[i - 1].apply(p))
                    ++adjacent_swap;
            }
            CHECK(diffs == 2);
            CHECK(adjacent_swap >= 1);
        }
    }
}

TEST_CASE("word action") {
    Word j{7, 9};
    CHECK(act_word(Permutation({2, 1}), j) == Word{9, 7});
    CHECK(act_word(Permutation::identity(2), j) == j);
    CHECK_THROWS_AS(act_word(Permutation::identity(3), j), DimensionError);

    // t_{b,a} pulls the b-th letter in front of positions a..b-1.
    Word w{1, 2, 3, 4, 5};
    CHECK(act_word(cycle(4, 2, 5), w) == Word{1, 4, 2, 3, 5});

    // Left action, exhaustively for n <= 4.
    for (int n = 1; n <= 4; ++n) {
        Word base;
        for (int i = 0; i < n; ++i) base.push_back(10 + i);
        auto perms = johnson_trotter(n);
        for (const auto& g : perms)
            for (const auto& h : perms)
                CHECK(act_word(g, act_word(h, base)) == act_word(g * h, base));
    }
}

TEST_CASE("multiset rearrangements") {
    CHECK(multiset_words(MultisetQ({5})) == std::vector<Word>{{5}});
    CHECK(multiset_words(MultisetQ({1, 1, 2})) == std::vector<Word>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(multiset_words(MultisetQ({1, 2, 3})) ==
          std::vector<Word>{{1, 2, 3}, {1, 3, 2}, {3, 1, 2}, {3, 2, 1}, {2, 3, 1}, {2, 1, 3}});
    CHECK(multiset_words(MultisetQ(std::vector<int>{})) == std::vector<Word>{{}});

    // Count = multinomial coefficient, no duplicates; random multisets.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng() % 8) + 1;
        std::vector<int> labels;
        for (int i = 0; i < n; ++i) labels.push_back(static_cast<int>(rng() % 4));
        MultisetQ Q(labels);
        auto words = multiset_words(Q);
        std::set<Word> distinct(words.begin(), words.end());
        CHECK(distinct.size() == words.size());
        std::uint64_t count = 1;
        for (int i = 2; i <= n; ++i) count *= static_cast<std::uint64_t>(i);
        for (int m : Q.multiplicities()) {
            std::uint64_t mf = 1;
            for (int i = 2; i <= m; ++i) mf *= static_cast<std::uint64_t>(i);
            count /= mf;
        }
        CHECK(words.size() == count);
    }

    MultisetQ Q({3, 1, 3, 2});
    CHECK(Q.labels() == std::vector<int>{1, 2, 3, 3});
    CHECK(Q.support() == std::vector<int>{1, 2, 3});
    CHECK(Q.multiplicities() == std::vector<int>{1, 1, 2});
    CHECK_FALSE(Q.is_generic());
    CHECK(MultisetQ({4, 2, 9}).is_generic());
}
