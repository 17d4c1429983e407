#include <doctest.h>

#include <random>

#include "descmat/linalg.hpp"

using namespace descmat;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Cofactor expansion along the first row; the independent oracle for det.
BigRational det_cofactor(const ExactMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    BigRational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        ExactMatrix minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        BigRational term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

ExactMatrix random_int_matrix(std::mt19937& rng, std::size_t order, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion on small random matrices") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t order = 1 + trial % 5;
        ExactMatrix m = random_int_matrix(rng, order, -4, 4);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant basics") {
    CHECK(det(ExactMatrix::identity(5)) == 1);
    ExactMatrix zero_row = from_ints({{1, 2}, {2, 4}});
    CHECK(det(zero_row) == 0);
    // needs a row swap to find a pivot
    ExactMatrix swapped = from_ints({{0, 1}, {1, 0}});
    CHECK(det(swapped) == -1);
}

TEST_CASE("determinant of rational matrices clears denominators") {
    ExactMatrix m(2);
    m.at(0, 0) = make_rational(1, 2);
    m.at(0, 1) = make_rational(1, 3);
    m.at(1, 0) = make_rational(1, 5);
    m.at(1, 1) = make_rational(1, 7);
    CHECK(det(m) == make_rational(1 * 15 - 2 * 7, 210));  // 1/14 - 1/15 = 1/210
}

TEST_CASE("det is multiplicative on random integer matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t order = 2 + trial % 15;  // up to 16
        ExactMatrix a = random_int_matrix(rng, order, -3, 3);
        ExactMatrix b = random_int_matrix(rng, order, -3, 3);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("inverse times original is the identity") {
    std::mt19937 rng(99);
    int found = 0;
    while (found < 8) {
        std::size_t order = 1 + found % 6;
        ExactMatrix a = random_int_matrix(rng, order, -3, 3);
        if (det(a) == 0) continue;
        ++found;
        CHECK(inverse(a) * a == ExactMatrix::identity(order));
        CHECK(a * inverse(a) == ExactMatrix::identity(order));
    }
    CHECK(inverse(ExactMatrix::identity(4)) == ExactMatrix::identity(4));
    CHECK_THROWS_AS(inverse(from_ints({{1, 2}, {2, 4}})), SingularMatrixError);
}

TEST_CASE("charpoly examples and identities") {
    // identity of order 2: (x-1)^2
    Polynomial p = charpoly(ExactMatrix::identity(2));
    CHECK(p == Polynomial({BigRational(1), BigRational(-2), BigRational(1)}));
    CHECK(p.to_string() == "x^2 - 2*x + 1");

    std::mt19937 rng(123);
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t order = 1 + trial % 6;
        ExactMatrix a = random_int_matrix(rng, order, -3, 3);
        Polynomial cp = charpoly(a);
        CHECK(cp.is_integral());
        // p(0) = det(-A) = (-1)^order det(A)
        BigRational expected = det(a);
        if (order % 2 == 1) expected = -expected;
        CHECK(cp.eval(0) == expected);
        // p(t) = det(tI - A) at a few integer points
        for (long t : {1L, -2L, 5L}) {
            ExactMatrix shifted(order);
            for (std::size_t i = 0; i < order; ++i)
                for (std::size_t j = 0; j < order; ++j)
                    shifted.at(i, j) = (i == j ? BigRational(t) : BigRational(0)) - a.at(i, j);
            CHECK(cp.eval(t) == det(shifted));
        }
    }

    ExactMatrix big(kCharpolyMaxOrder + 1);
    CHECK_THROWS_AS(charpoly(big), std::domain_error);
}

TEST_CASE("order mismatch is rejected") {
    ExactMatrix a(2), b(3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("triangularity tests") {
    ExactMatrix lower = from_ints({{1, 0}, {5, 2}});
    CHECK(is_lower_triangular(lower));
    CHECK_FALSE(is_upper_triangular(lower));
    CHECK(is_lower_triangular(ExactMatrix::identity(3)));
    CHECK(is_upper_triangular(ExactMatrix::identity(3)));
}

TEST_CASE("squarefree part degree") {
    // x^4 - 7x^2 + 12 has four distinct roots
    Polynomial p({BigRational(12), BigRational(0), BigRational(-7), BigRational(0),
                  BigRational(1)});
    CHECK(squarefree_part_degree(p) == 4);
    // (x-1)^2
    Polynomial q({BigRational(1), BigRational(-2), BigRational(1)});
    CHECK(squarefree_part_degree(q) == 1);
    CHECK_THROWS_AS(squarefree_part_degree(Polynomial()), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic sanity") {
    Polynomial x = Polynomial::x();
    Polynomial p = (x * x - Polynomial::constant(3)) * (x * x - Polynomial::constant(4));
    CHECK(p == Polynomial({BigRational(12), BigRational(0), BigRational(-7), BigRational(0),
                           BigRational(1)}));
    CHECK(p.degree() == 4);
    CHECK(p.eval(2) == 0);
    CHECK(poly_gcd(p, p.derivative()).degree() == 0);
}
