#include "descmat/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace descmat {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (const auto& row : rows_) n_ += static_cast<int>(row.size());
    row_of_.assign(n_, -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("tableau has an empty row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("tableau rows must weakly shorten");
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            if (v < 1 || v > n_ || row_of_[v - 1] != -1)
                throw std::invalid_argument("tableau entries must be exactly 1..n");
            row_of_[v - 1] = static_cast<int>(r);
            if (c > 0 && row[c] <= row[c - 1])
                throw std::invalid_argument("tableau rows must increase");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw std::invalid_argument("tableau columns must increase");
        }
    }
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

StandardTableau StandardTableau::row_superstandard(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        std::vector<int> row(len);
        for (int c = 0; c < len; ++c) row[c] = next++;
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ',';
            os << rows_[r][c];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Subset descents(const StandardTableau& t) {
    std::uint64_t bits = 0;
    for (int i = 1; i < t.n(); ++i)
        if (t.row_of(i + 1) > t.row_of(i)) bits |= std::uint64_t{1} << (i - 1);
    return Subset(bits, std::max(t.n() - 1, 0));
}

int major_index(const StandardTableau& t) {
    int maj = 0;
    for (int i : descents(t).elements()) maj += i;
    return maj;
}

void for_each_syt(const Partition& shape,
                  const std::function<void(const StandardTableau&)>& visit) {
    const int n = shape.n();
    std::vector<std::vector<int>> rows(shape.length());
    std::vector<int> fill(shape.length(), 0);  // cells used per row
    auto rec = [&](auto&& self, int value) -> void {
        if (value > n) {
            visit(StandardTableau(rows));
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            if (fill[r] >= shape.parts()[r]) continue;
            if (r > 0 && fill[r] >= fill[r - 1]) continue;  // column would not increase
            rows[r].push_back(value);
            ++fill[r];
            self(self, value + 1);
            --fill[r];
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
}

BigInt count_syt(const Partition& shape) {
    BigInt count = 0;
    for_each_syt(shape, [&](const StandardTableau&) { ++count; });
    return count;
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& pi) {
    std::vector<std::vector<int>> p, q;
    for (int i = 1; i <= pi.n(); ++i) {
        int value = pi(i);
        std::size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), value);
            if (it == row.end()) {
                row.push_back(value);
                q[r].push_back(i);
                break;
            }
            std::swap(*it, value);  // bump and continue in the next row
            ++r;
        }
    }
    return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

}  // namespace descmat
