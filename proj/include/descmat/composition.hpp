#pragma once

#include <string>
#include <utility>
#include <vector>

#include "descmat/subset.hpp"

namespace descmat {

/// Ordered tuple of positive integers with sum n (n >= 1, so parts nonempty).
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// "3,4,2,5"
    std::string to_string() const;

    bool operator==(const Composition& other) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Weakly decreasing composition; the empty partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Composition as_composition() const { return Composition(parts_); }
    std::string to_string() const;

    bool operator==(const Partition& other) const = default;
    /// Lexicographic on the part vectors; puts (1,1,...,1) first and (n) last.
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

Partition underlying_partition(const Composition& mu);

/// S(mu) = set of partial sums (contains n, ambient n) and
/// I(mu) = [n] \ S(mu) viewed inside [n-1] (ambient n-1).
std::pair<Subset, Subset> composition_to_subsets(const Composition& mu);

/// Just I(mu), ambient n-1.
Subset composition_descent_set(const Composition& mu);

/// The unique composition mu of n with I(mu) = J; requires J.ambient() == n-1.
Composition subset_to_composition(const Subset& J, int n);

/// True iff every part of la splits into consecutive parts of mu, in order;
/// equivalently S(la) is contained in S(mu).
bool refines(const Composition& mu, const Composition& la);

/// All compositions of n in anti-lexicographic order of I(mu)
/// ((1,...,1) first, (n) last). Empty for n = 0.
std::vector<Composition> compositions_of(int n);

/// All partitions of n in ascending lexicographic order ((1,...,1) first, (n) last).
std::vector<Partition> partitions_of(int n);

Partition parse_partition(const std::string& text);

}  // namespace descmat
