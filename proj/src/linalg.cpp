#include "descmat/linalg.hpp"

#include <cassert>
#include <vector>

namespace descmat {

namespace {

// Exact division with a hard check; Bareiss pivots divide exactly on integer
// input, so a nonzero remainder means corrupted arithmetic.
BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("Bareiss elimination produced a non-exact division");
    return q;
}

}  // namespace

BigRational det(const ExactMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;

    // Clear denominators row by row; det(m) = det(integral) / prod(row factors).
    std::vector<BigInt> a(n * n);
    BigInt denom = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            BigRational scaled = m.at(i, j) * BigRational(row_lcm);
            assert(is_integer(scaled));
            a[i * n + j] = scaled.get_num();
        }
        denom *= row_lcm;
    }

    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = div_exact(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    BigRational result(sign > 0 ? at(n - 1, n - 1) : BigInt(-at(n - 1, n - 1)), denom);
    result.canonicalize();
    return result;
}

ExactMatrix inverse(const ExactMatrix& m) {
    const std::size_t n = m.order();
    ExactMatrix work = m;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && work.at(pivot, k) == 0) ++pivot;
        if (pivot == n) throw SingularMatrixError();
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(k, j), work.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        }
        BigRational p = work.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(k, j) /= p;
            inv.at(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work.at(i, k) == 0) continue;
            BigRational f = work.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

Polynomial charpoly(const ExactMatrix& m) {
    const std::size_t n = m.order();
    if (n > kCharpolyMaxOrder)
        throw std::domain_error("charpoly supported up to order " +
                                std::to_string(kCharpolyMaxOrder));
    std::vector<BigRational> c(n + 1);
    c[n] = 1;
    if (n == 0) return Polynomial(std::move(c));
    ExactMatrix work = m;  // M_1 = A
    for (std::size_t k = 1; k <= n; ++k) {
        c[n - k] = -work.trace() / BigRational(static_cast<long>(k));
        if (k < n) {
            ExactMatrix shifted = work;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k];
            work = m * shifted;
        }
    }
    return Polynomial(std::move(c));
}

}  // namespace descmat
