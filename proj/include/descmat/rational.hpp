#pragma once

#include <gmpxx.h>

#include <string>

namespace descmat {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical rational with positive denominator and gcd(|num|, den) = 1.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned long n);

/// base^exp for nonnegative integer exponents.
BigInt int_pow(const BigInt& base, unsigned long exp);

/// "p" for integers, "p/q" otherwise (lowest terms, q > 0).
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q = 0.
BigRational parse_rational(const std::string& text);

/// r divides s when s/r is an integer (both rational, r != 0).
bool rat_divides(const BigRational& r, const BigRational& s);

}  // namespace descmat
