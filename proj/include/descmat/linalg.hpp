#pragma once

#include <stdexcept>

#include "descmat/matrix.hpp"
#include "descmat/polynomial.hpp"

namespace descmat {

struct SingularMatrixError : std::domain_error {
    SingularMatrixError() : std::domain_error("matrix is singular") {}
};

/// Exact determinant by fraction-free (Bareiss) elimination. Rational input is
/// cleared to integers row by row first; on integer input every intermediate
/// value is an integer (divisions are checked to be exact).
BigRational det(const ExactMatrix& m);

/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrixError.
ExactMatrix inverse(const ExactMatrix& m);

/// Orders above this are outside the supported envelope for charpoly.
inline constexpr std::size_t kCharpolyMaxOrder = 64;

/// Exact characteristic polynomial det(xI - m) via the Faddeev-LeVerrier
/// recurrence; monic of degree order(). Throws std::domain_error above
/// kCharpolyMaxOrder.
Polynomial charpoly(const ExactMatrix& m);

}  // namespace descmat
