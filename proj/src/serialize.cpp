#include "descmat/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace descmat {

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::vector<std::string>> matrix_cells(const ExactMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.order(), std::vector<std::string>(m.order()));
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) cells[i][j] = to_string(m.at(i, j));
    return cells;
}

std::string aligned(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::size_t cols = header.empty() ? (rows.empty() ? 0 : rows[0].size()) : header.size();
    std::vector<std::size_t> width(cols, 0);
    for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
        }
        os << '\n';
    };
    if (!header.empty()) emit(header);
    for (const auto& row : rows) emit(row);
    return os.str();
}

}  // namespace

OutputFormat format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "pretty") return OutputFormat::Pretty;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string matrix_to_pretty(const ExactMatrix& m) { return aligned({}, matrix_cells(m)); }

std::string matrix_to_csv(const ExactMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) os << ',';
            os << to_string(m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

std::string matrix_to_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows.dump() + "\n";
}

std::string render_matrix(const ExactMatrix& m, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return matrix_to_csv(m);
        case OutputFormat::Json: return matrix_to_json(m);
        case OutputFormat::Pretty: return matrix_to_pretty(m);
    }
    throw std::logic_error("unreachable");
}

std::string render_table(const Table& t, OutputFormat format) {
    switch (format) {
        case OutputFormat::Pretty: return aligned(t.header, t.rows);
        case OutputFormat::Csv: {
            std::ostringstream os;
            auto emit = [&](const std::vector<std::string>& row) {
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) os << ',';
                    os << csv_cell(row[j]);
                }
                os << '\n';
            };
            emit(t.header);
            for (const auto& row : t.rows) emit(row);
            return os.str();
        }
        case OutputFormat::Json: {
            nlohmann::json j;
            j["columns"] = t.header;
            j["rows"] = t.rows;
            return j.dump() + "\n";
        }
    }
    throw std::logic_error("unreachable");
}

nlohmann::json subset_to_json(const Subset& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e : s.elements()) arr.push_back(e);
    return arr;
}

nlohmann::json fineness_to_json(const FinenessReport& r) {
    nlohmann::json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["fine"] = r.fine;
    j["consistent"] = r.consistent;
    nlohmann::json mults = nlohmann::json::object();
    for (const auto& [nu, m] : r.multiplicities) mults[nu.to_string()] = to_string(m);
    j["multiplicities"] = std::move(mults);
    j["consistency_failures"] = r.consistency_failures;
    return j;
}

}  // namespace descmat
