#pragma once

#include <cstddef>
#include <vector>

#include "descmat/rational.hpp"

namespace descmat {

/// Dense square matrix of exact rationals, row-major. Rows and columns of the
/// combinatorial families are indexed by subsets in anti-lexicographic order,
/// i.e. entry (I, J) lives at (ord(I), ord(J)).
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t order) : order_(order), e_(order * order) {}

    static ExactMatrix identity(std::size_t order);

    std::size_t order() const { return order_; }

    BigRational& at(std::size_t i, std::size_t j) { return e_[i * order_ + j]; }
    const BigRational& at(std::size_t i, std::size_t j) const { return e_[i * order_ + j]; }

    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix scaled(const BigRational& c) const;

    bool operator==(const ExactMatrix& other) const = default;

    bool is_integral() const;
    BigRational trace() const;

private:
    std::size_t order_;
    std::vector<BigRational> e_;
};

bool is_lower_triangular(const ExactMatrix& m);
bool is_upper_triangular(const ExactMatrix& m);

}  // namespace descmat
