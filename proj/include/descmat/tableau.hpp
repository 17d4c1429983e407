#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "descmat/composition.hpp"
#include "descmat/permutation.hpp"
#include "descmat/subset.hpp"

namespace descmat {

/// Standard Young tableau: rows and columns strictly increasing, entries 1..n.
class StandardTableau {
public:
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int n() const { return n_; }

    /// Row index (0-based) containing the value v.
    int row_of(int v) const { return row_of_[v - 1]; }

    /// Rows filled left to right, top to bottom: 1..l1, then l1+1..l1+l2, ...
    static StandardTableau row_superstandard(const Partition& shape);

    /// "[[1,2],[3]]"
    std::string to_string() const;

    bool operator==(const StandardTableau& other) const { return rows_ == other.rows_; }
    bool operator<(const StandardTableau& other) const { return rows_ < other.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;
    int n_ = 0;
};

/// Des(T) = {i : i+1 lies in a strictly lower row than i}, subset of [n-1].
Subset descents(const StandardTableau& t);

int major_index(const StandardTableau& t);

/// Visits all standard Young tableaux of the given shape.
void for_each_syt(const Partition& shape, const std::function<void(const StandardTableau&)>& visit);

BigInt count_syt(const Partition& shape);

/// Row-insertion RSK: (insertion tableau P, recording tableau Q), equal shapes.
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& pi);

}  // namespace descmat
