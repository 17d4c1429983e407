#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "descmat/fine_sets.hpp"
#include "descmat/matrix.hpp"
#include "descmat/subset.hpp"

namespace descmat {

enum class OutputFormat { Csv, Json, Pretty };

OutputFormat format_from_string(const std::string& name);

/// Right-aligned columns separated by single spaces, entries "p" or "p/q".
std::string matrix_to_pretty(const ExactMatrix& m);

/// One row per line, entries "p" or "p/q" joined by commas.
std::string matrix_to_csv(const ExactMatrix& m);

/// JSON array of arrays of strings (exactness preserved), compact, newline-terminated.
std::string matrix_to_json(const ExactMatrix& m);

std::string render_matrix(const ExactMatrix& m, OutputFormat format);

/// Column-labelled table of exact-value strings.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& t, OutputFormat format);

nlohmann::json subset_to_json(const Subset& s);
nlohmann::json fineness_to_json(const FinenessReport& r);

}  // namespace descmat
