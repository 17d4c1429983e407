#include "descmat/matrix.hpp"

#include <stdexcept>

namespace descmat {

namespace {

void check_same_order(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("matrix order mismatch");
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t order) {
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
    check_same_order(*this, other);
    ExactMatrix r(order_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + other.e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
    check_same_order(*this, other);
    ExactMatrix r(order_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - other.e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    check_same_order(*this, other);
    const std::size_t n = order_;
    ExactMatrix r(n);
    if (is_integral() && other.is_integral()) {
        // Integer fast path: accumulate numerators with mpz, skip mpq
        // re-canonicalization on every addmul.
        BigInt acc;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                acc = 0;
                for (std::size_t k = 0; k < n; ++k)
                    mpz_addmul(acc.get_mpz_t(), at(i, k).get_num_mpz_t(),
                               other.at(k, j).get_num_mpz_t());
                r.at(i, j) = acc;
            }
        }
        return r;
    }
    BigRational acc;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += at(i, k) * other.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

ExactMatrix ExactMatrix::scaled(const BigRational& c) const {
    ExactMatrix r(order_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

bool ExactMatrix::is_integral() const {
    for (const BigRational& q : e_)
        if (!is_integer(q)) return false;
    return true;
}

BigRational ExactMatrix::trace() const {
    BigRational t = 0;
    for (std::size_t i = 0; i < order_; ++i) t += at(i, i);
    return t;
}

bool is_lower_triangular(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = i + 1; j < m.order(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

bool is_upper_triangular(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

}  // namespace descmat
