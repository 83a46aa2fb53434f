#include "qalg/word.hpp"

#include <algorithm>
#include <set>

namespace qalg {

Word act_word(const Permutation& g, const Word& j) {
    if (g.size() != static_cast<int>(j.size())) throw DimensionError("permutation degree does not match word length");
    Word out(j.size());
    for (int p = 1; p <= g.size(); ++p) out[static_cast<std::size_t>(g.apply(p)) - 1] = j[static_cast<std::size_t>(p) - 1];
    return out;
}

MultisetQ::MultisetQ(std::vector<int> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (int l : labels_)
        if (l < 0) throw ConfigError("generator labels must be nonnegative");
}

std::vector<int> MultisetQ::support() const {
    std::vector<int> s;
    for (int l : labels_)
        if (s.empty() || s.back() != l) s.push_back(l);
    return s;
}

std::vector<int> MultisetQ::multiplicities() const {
    std::vector<int> m;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i == 0 || labels_[i] != labels_[i - 1])
            m.push_back(1);
        else
            ++m.back();
    }
    return m;
}

bool MultisetQ::is_generic() const {
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i] == labels_[i - 1]) return false;
    return true;
}

std::vector<Word> multiset_words(const MultisetQ& Q) {
    const auto& sorted = Q.labels();
    const int n = Q.size();
    std::vector<Word> words;
    const bool generic = Q.is_generic();
    std::set<Word> seen;
    for (const Permutation& g : johnson_trotter(n)) {
        Word w(sorted.size());
        // w_p = l_{g(p)}: the word carries the one-line pattern of g.
        for (int p = 1; p <= n; ++p)
            w[static_cast<std::size_t>(p) - 1] = sorted[static_cast<std::size_t>(g.apply(p)) - 1];
        if (generic || seen.insert(w).second) words.push_back(std::move(w));
    }
    return words;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "·";
        s += std::to_string(w[i]);
    }
    return s;
}

Word word_from_string(const std::string& s) {
    Word w;
    std::size_t pos = 0;
    const std::string sep = "·";
    while (pos < s.size()) {
        std::size_t next = s.find(sep, pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw ConfigError("malformed word string '" + s + "'");
        w.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + sep.size();
    }
    return w;
}

}  // namespace qalg
