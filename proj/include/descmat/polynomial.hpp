#pragma once

#include <string>
#include <vector>

#include "descmat/rational.hpp"

namespace descmat {

/// Univariate polynomial, coefficients ascending by degree. Coefficients are
/// exact rationals; all polynomials arising from integer matrices stay integral.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<BigRational> coeffs);

    static Polynomial constant(const BigRational& c);
    static Polynomial x();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigRational& coeff(int i) const;
    const BigRational& leading() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const BigRational& c) const;

    Polynomial derivative() const;
    BigRational eval(const BigRational& x) const;
    bool is_integral() const;

    /// "x^4 - 7*x^2 + 12"
    std::string to_string() const;

    bool operator==(const Polynomial& other) const = default;

private:
    void normalize();
    std::vector<BigRational> c_;
};

/// Monic gcd (Euclid over the rationals); gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Degree of p / gcd(p, p'); throws std::invalid_argument on the zero polynomial.
int squarefree_part_degree(const Polynomial& p);

}  // namespace descmat
