#pragma once

#include <string>
#include <vector>

#include "qalg/permutation.hpp"

namespace qalg {

/// A word j_1...j_n of generator labels (nonnegative integers, repeats
/// allowed). Indexing in formulas is 1-based; storage is a plain vector.
using Word = std::vector<int>;

/// Position action of g on words: the output holds j_{g^{-1}(p)} at
/// position p. Left action: act_word(g, act_word(h, j)) = act_word(g*h, j).
Word act_word(const Permutation& g, const Word& j);

/// A multiset of labels l_1 <= ... <= l_n; generic when all distinct.
class MultisetQ {
public:
    MultisetQ() = default;
    explicit MultisetQ(std::vector<int> labels);  // sorted on construction

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }

    /// Distinct labels, ascending.
    std::vector<int> support() const;
    /// Multiplicity of each support label, in support order.
    std::vector<int> multiplicities() const;

    bool is_generic() const;

    friend bool operator==(const MultisetQ&, const MultisetQ&) = default;

private:
    std::vector<int> labels_;
};

/// All distinct rearrangements of Q, ordered by applying the plain-changes
/// permutation sequence to the sorted word (first occurrence kept when Q
/// has repeated labels). The count is the multinomial coefficient
/// n!/(n_1!...n_p!).
std::vector<Word> multiset_words(const MultisetQ& Q);

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

}  // namespace qalg
