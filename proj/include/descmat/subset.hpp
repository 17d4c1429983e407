#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "descmat/rational.hpp"

namespace descmat {

/// Largest supported ambient size; every row/column index fits in a word.
inline constexpr int kMaxAmbient = 40;

/// A subset of [n] = {1,...,n} stored as a bit mask: bit j-1 set <=> j in the subset.
/// The ambient size n is carried alongside the mask; the mask value equals
/// ord(J) = sum over j in J of 2^(j-1), the rank of J in the anti-lexicographic
/// order on P_n (0 for the empty set).
class Subset {
public:
    Subset() = default;
    Subset(std::uint64_t bits, int ambient);

    static Subset empty(int ambient) { return Subset(0, ambient); }
    static Subset full(int ambient);
    static Subset of(std::initializer_list<int> elems, int ambient);
    static Subset from_elements(const std::vector<int>& elems, int ambient);

    int ambient() const { return ambient_; }
    std::uint64_t bits() const { return bits_; }
    std::uint64_t ord() const { return bits_; }
    int size() const;
    bool is_empty() const { return bits_ == 0; }

    bool contains(int j) const;
    bool subset_of(const Subset& other) const;

    Subset intersect(const Subset& other) const;
    Subset unite(const Subset& other) const;
    Subset minus(const Subset& other) const;
    Subset complement() const;

    /// Elements in increasing order.
    std::vector<int> elements() const;

    /// "{}" or "{1,3,4}".
    std::string to_string() const;

    bool operator==(const Subset& other) const = default;

private:
    std::uint64_t bits_ = 0;
    int ambient_ = 0;
};

/// A run {lo, lo+1, ..., lo+len-1} of consecutive elements.
struct Run {
    int lo = 0;
    int len = 0;
    int max() const { return lo + len - 1; }
    /// The element just below the run (0 when the run starts at 1).
    int below() const { return lo - 1; }
    bool operator==(const Run&) const = default;
};

/// Maximal consecutive intervals of I, in increasing order.
std::vector<Run> runs(const Subset& I);

/// Anti-lexicographic comparison: I < J iff max(I symdiff J) lies in J,
/// equivalently ord(I) < ord(J). Comparing a subset with itself is an error.
bool antilex_less(const Subset& I, const Subset& J);

/// True iff for every run {m+1,...,m+l} of I the intersection with J is a
/// prefix {m+1,...,m+p} for some 0 <= p <= l.
bool prefix_compatible(const Subset& I, const Subset& J);

/// Order of the parabolic subgroup generated by {s_i : i in I}: the product
/// of (|I_k| + 1)! over the runs of I.
BigInt parabolic_order(const Subset& I);

/// max{0 <= i <= n : i not in I}; 0 exactly when I = [n].
int fin(const Subset& I);

/// The subset of [ambient] with ord(J) = ord.
Subset subset_from_ord(std::uint64_t ord, int ambient);

}  // namespace descmat
