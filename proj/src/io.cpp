#include "qalg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qalg {

namespace {

std::pair<int, int> parse_pair_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw ConfigError("q-table key must look like \"i,j\" (got '" + key + "')");
    try {
        int i = std::stoi(key.substr(0, comma));
        int j = std::stoi(key.substr(comma + 1));
        return {i, j};
    } catch (const std::exception&) {
        throw ConfigError("cannot parse q-table key '" + key + "'");
    }
}

}  // namespace

QFileData parse_q_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed q-parameter JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("q"))
        throw ConfigError("q-parameter file needs \"labels\" and \"q\" members");
    QFileData data;
    for (const auto& l : doc["labels"]) {
        if (!l.is_number_integer() || l.get<long long>() < 0)
            throw ConfigError("labels must be nonnegative integers");
        data.labels.push_back(l.get<int>());
    }
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(data.labels.size()))
            throw ConfigError("\"n\" does not match the number of labels");
    }
    for (const auto& [key, value] : doc["q"].items()) {
        auto pair = parse_pair_key(key);
        Rational r;
        if (value.is_string()) {
            r = parse_rational(value.get<std::string>());
        } else if (value.is_number_integer()) {
            r = Rational(value.get<long long>());
        } else {
            throw ConfigError("q-values must be exact rational strings or integers (key '" + key + "')");
        }
        data.values[pair] = r;
    }
    return data;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QFileData read_q_file(const std::string& path) { return parse_q_json(read_text_file(path)); }

std::string q_file_json(const QFileData& data) {
    nlohmann::json doc;
    doc["n"] = data.labels.size();
    doc["labels"] = data.labels;
    nlohmann::json q = nlohmann::json::object();
    for (const auto& [key, value] : data.values)
        q[std::to_string(key.first) + "," + std::to_string(key.second)] = format_rational(value);
    doc["q"] = q;
    return doc.dump(2);
}

std::string matrix_csv(const MatrixTable& t) {
    std::ostringstream out;
    for (const Word& w : t.basis) out << "," << word_to_string(w);
    out << "\n";
    for (std::size_t r = 0; r < t.cells.size(); ++r) {
        out << word_to_string(t.basis[r]);
        for (const std::string& cell : t.cells[r]) out << "," << cell;
        out << "\n";
    }
    return out.str();
}

MatrixTable matrix_table_from_csv(const std::string& text) {
    MatrixTable t;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            auto comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (header) {
            for (std::size_t i = 1; i < fields.size(); ++i) t.basis.push_back(word_from_string(fields[i]));
            header = false;
            continue;
        }
        if (fields.size() != t.basis.size() + 1) throw ConfigError("ragged CSV matrix row");
        t.cells.emplace_back(fields.begin() + 1, fields.end());
    }
    if (t.cells.size() != t.basis.size()) throw ConfigError("CSV matrix is not square");
    return t;
}

std::string matrix_json(const MatrixTable& t, const std::string& op, const std::string& field_desc) {
    nlohmann::json doc;
    doc["op"] = op;
    doc["field"] = field_desc;
    std::vector<std::string> basis;
    basis.reserve(t.basis.size());
    for (const Word& w : t.basis) basis.push_back(word_to_string(w));
    doc["basis"] = basis;
    doc["rows"] = t.cells;
    return doc.dump(2);
}

MatrixTable matrix_table_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed matrix JSON: ") + e.what());
    }
    if (!doc.contains("basis") || !doc.contains("rows")) throw ConfigError("matrix JSON needs \"basis\" and \"rows\"");
    MatrixTable t;
    for (const auto& b : doc["basis"]) t.basis.push_back(word_from_string(b.get<std::string>()));
    for (const auto& row : doc["rows"]) {
        std::vector<std::string> cells;
        for (const auto& cell : row) cells.push_back(cell.get<std::string>());
        t.cells.push_back(std::move(cells));
    }
    if (t.cells.size() != t.basis.size()) throw ConfigError("matrix JSON is not square");
    return t;
}

}  // namespace qalg
