#include "descmat/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace descmat {

namespace {
const BigRational kZero = 0;
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({BigRational(0), BigRational(1)}); }

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const BigRational& Polynomial::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<BigRational> r(std::max(c_.size(), other.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<BigRational> r(std::max(c_.size(), other.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<BigRational> r(c_.size() + other.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < other.c_.size(); ++j) r[i + j] += c_[i] * other.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const BigRational& c) const {
    std::vector<BigRational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<BigRational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    return Polynomial(std::move(r));
}

BigRational Polynomial::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool Polynomial::is_integral() const {
    for (const BigRational& q : c_)
        if (!is_integer(q)) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRational& c = c_[i];
        if (c == 0) continue;
        BigRational abs_c = c < 0 ? BigRational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = abs_c == 1;
        if (i == 0) {
            os << descmat::to_string(abs_c);
        } else {
            if (!unit) os << descmat::to_string(abs_c) << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        // remainder of a by b
        Polynomial r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            BigRational f = r.leading() / b.leading();
            int shift = r.degree() - b.degree();
            std::vector<BigRational> m(shift + 1);
            m[shift] = f;
            r = r - b * Polynomial(std::move(m));
        }
        a = b;
        b = r;
    }
    if (a.is_zero() || a.leading() == 1) return a;
    return a.scaled(1 / BigRational(a.leading()));
}

int squarefree_part_degree(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    Polynomial g = poly_gcd(p, p.derivative());
    return p.degree() - g.degree();
}

}  // namespace descmat
