#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qalg/matrix.hpp"
#include "qalg/qspec.hpp"
#include "qalg/rational.hpp"
#include "qalg/word.hpp"

namespace qalg {

/// Parsed q-parameter file: JSON object
///   {"n": 2, "labels": [1,2], "q": {"1,2": "3/4", "2,1": "5", ...}}
/// Values are exact rational strings (integers also accepted); floats are
/// rejected. Prime-field use reduces the rationals mod p.
struct QFileData {
    std::vector<int> labels;
    std::map<std::pair<int, int>, Rational> values;
};

QFileData parse_q_json(const std::string& text);
QFileData read_q_file(const std::string& path);
std::string q_file_json(const QFileData& data);

template <class F>
QSpec<F> to_qspec(const QFileData& data, const F& field) {
    QSpec<F> q;
    for (const auto& [key, value] : data.values) q.set(key.first, key.second, field.from_rational(value));
    return q;
}

/// Exchange form of a weight matrix: basis words plus entries rendered as
/// exact strings (rational literals or prime-field residues).
struct MatrixTable {
    std::vector<Word> basis;
    std::vector<std::vector<std::string>> cells;  // row-major, cells[r][c]
};

template <class F>
MatrixTable to_matrix_table(const Matrix<typename F::Elem>& m, const std::vector<Word>& basis, const F& field) {
    MatrixTable t;
    t.basis = basis;
    t.cells.resize(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        auto& row = t.cells[static_cast<std::size_t>(r)];
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) row.push_back(field.to_string(m(r, c)));
    }
    return t;
}

template <class F>
Matrix<typename F::Elem> matrix_from_table(const MatrixTable& t, const F& field) {
    const int dim = static_cast<int>(t.cells.size());
    Matrix<typename F::Elem> m(dim, dim, field.zero());
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(t.cells[static_cast<std::size_t>(r)].size()) != dim)
            throw ConfigError("matrix table is not square");
        for (int c = 0; c < dim; ++c)
            m(r, c) = field.from_rational(parse_rational(t.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
    }
    return m;
}

/// CSV with a header row/column of basis words (labels joined by a middle
/// dot); cell (r,c) is the entry's exact string.
std::string matrix_csv(const MatrixTable& t);
MatrixTable matrix_table_from_csv(const std::string& text);

std::string matrix_json(const MatrixTable& t, const std::string& op, const std::string& field_desc);
MatrixTable matrix_table_from_json(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace qalg
