#pragma once

#include <functional>
#include <string>
#include <vector>

#include "descmat/composition.hpp"
#include "descmat/subset.hpp"

namespace descmat {

/// Permutation of [n] in one-line notation (1-based values).
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    /// The simple reflection s_i = (i, i+1) in S_n.
    static Permutation simple(int i, int n);

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    /// Function composition: (p.compose(q))(i) = p(q(i)), q applied first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    bool is_involution() const;
    bool is_identity() const;

    /// "936871254" for n <= 9, comma-separated otherwise.
    std::string to_string() const;

    bool operator==(const Permutation& other) const = default;
    bool operator<(const Permutation& other) const { return w_ < other.w_; }

private:
    std::vector<int> w_;
};

/// Des(pi) = {i : pi(i) > pi(i+1)}, a subset of [n-1].
Subset descents(const Permutation& pi);

/// Coxeter length = number of inversions.
int inversions(const Permutation& pi);

/// maj(pi) = sum of the descent positions.
int major_index(const Permutation& pi);

struct LengthMaj {
    int length;
    int maj;
};
LengthMaj length_and_maj(const Permutation& pi);

Partition cycle_type(const Permutation& pi);

/// c_J = s_{j_1} s_{j_2} ... s_{j_k} for J = {j_1 < ... < j_k} inside [n-1];
/// a Coxeter element of the parabolic subgroup generated by {s_i : i in J}.
/// Its cycle type is the underlying partition of the composition mu with
/// I(mu) = J.
Permutation coxeter_element(const Subset& J, int n);

/// Every prefix {pi(1),...,pi(k)} is a cyclic interval in Z_n (n read as 0).
bool is_arc_permutation(const Permutation& pi);

/// Visits all of S_n in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

Permutation parse_permutation(const std::string& text);

}  // namespace descmat
