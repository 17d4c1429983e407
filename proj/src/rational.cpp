#include "descmat/rational.hpp"

#include <stdexcept>

namespace descmat {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    BigRational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

bool rat_divides(const BigRational& r, const BigRational& s) {
    if (r == 0) throw std::invalid_argument("division by zero rational");
    return is_integer(BigRational(s / r));
}

}  // namespace descmat
