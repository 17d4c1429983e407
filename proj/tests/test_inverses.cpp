#include <doctest.h>

#include <vector>

#include "descmat/families.hpp"
#include "descmat/linalg.hpp"

using namespace descmat;

namespace {

ExactMatrix from_strings(const std::vector<std::vector<const char*>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = parse_rational(rows[i][j]);
    return m;
}

// Golden inverses, frozen entry by entry.
const ExactMatrix kA3Inv = from_strings({
    {"1/24", "1/24", "1/12", "1/12", "1/8", "1/8", "1/4", "1/4"},
    {"1/8", "-1/24", "1/12", "-1/12", "5/24", "-1/8", "1/12", "-1/4"},
    {"5/24", "5/24", "-1/12", "-1/12", "1/8", "1/8", "-1/4", "-1/4"},
    {"1/8", "-5/24", "-1/12", "1/12", "1/24", "-1/8", "-1/12", "1/4"},
    {"1/8", "1/8", "1/4", "1/4", "-1/8", "-1/8", "-1/4", "-1/4"},
    {"5/24", "-1/8", "1/12", "-1/4", "-5/24", "1/8", "-1/12", "1/4"},
    {"1/8", "1/8", "-1/4", "-1/4", "-1/8", "-1/8", "1/4", "1/4"},
    {"1/24", "-1/8", "-1/12", "1/4", "-1/24", "1/8", "1/12", "-1/4"},
});
const ExactMatrix kAM3Inv = from_strings({
    {"1", "0", "0", "0", "0", "0", "0", "0"},
    {"1/2", "-1/2", "0", "0", "0", "0", "0", "0"},
    {"1/2", "0", "-1/2", "0", "0", "0", "0", "0"},
    {"1/6", "-1/3", "-1/6", "1/3", "0", "0", "0", "0"},
    {"1/2", "0", "0", "0", "-1/2", "0", "0", "0"},
    {"1/4", "-1/4", "0", "0", "-1/4", "1/4", "0", "0"},
    {"1/6", "0", "-1/3", "0", "-1/6", "0", "1/3", "0"},
    {"1/24", "-1/8", "-1/12", "1/4", "-1/24", "1/8", "1/12", "-1/4"},
});

}  // namespace

TEST_CASE("golden inverses are reproduced") {
    CHECK(inverse(build(Family::A, 3)) == kA3Inv);
    CHECK(inverse(build(Family::AM, 3)) == kAM3Inv);
    CHECK(kA3Inv.at(0, 0) == make_rational(1, 24));
    CHECK(inverse(ExactMatrix::identity(8)) == ExactMatrix::identity(8));
}

TEST_CASE("AM inverse entry formula matches elimination") {
    for (int n = 0; n <= 5; ++n) {
        ExactMatrix inv = inverse(build(Family::AM, n));
        for (std::uint64_t i = 0; i < inv.order(); ++i)
            for (std::uint64_t j = 0; j < inv.order(); ++j)
                CHECK(inv.at(i, j) ==
                      am_inverse_entry(subset_from_ord(i, n), subset_from_ord(j, n)));
    }
}

TEST_CASE("AM inverse row structure") {
    for (int n = 0; n <= 5; ++n) {
        ExactMatrix inv = inverse(build(Family::AM, n));
        for (std::uint64_t i = 0; i < inv.order(); ++i) {
            BigRational abs_sum = 0;
            const BigRational& first = inv.at(i, 0);
            const BigRational& diag = inv.at(i, i);
            Subset I = subset_from_ord(i, n);
            // first entry is 1 / |parabolic subgroup|
            CHECK(first == make_rational(BigInt(1), parabolic_order(I)));
            BigInt diag_expect = 1;
            for (const Run& r : runs(I)) diag_expect *= r.len + 1;
            CHECK(abs(diag) == make_rational(BigInt(1), diag_expect));
            for (std::uint64_t j = 0; j < inv.order(); ++j) {
                const BigRational& e = inv.at(i, j);
                abs_sum += abs(e);
                if (e == 0) continue;
                CHECK(abs(e.get_num()) == 1);  // inverse of an integer
                CHECK(rat_divides(first, e));
                CHECK(rat_divides(e, diag));
            }
            CHECK(abs_sum == 1);
        }
    }
}

TEST_CASE("M_n(x) inverse entry formula matches elimination") {
    const std::vector<BigRational> xs = {make_rational(1, 2), make_rational(1), make_rational(2),
                                         make_rational(3)};
    for (int n = 0; n <= 4; ++n)
        for (const BigRational& x : xs) {
            ExactMatrix inv = inverse(mx_matrix(n, x));
            for (std::uint64_t i = 0; i < inv.order(); ++i)
                for (std::uint64_t j = 0; j < inv.order(); ++j)
                    CHECK(inv.at(i, j) ==
                          mx_inverse_entry(subset_from_ord(i, n), subset_from_ord(j, n), x));
        }
}

TEST_CASE("A inverse factors through the Mobius matrix") {
    for (int n = 0; n <= 5; ++n)
        CHECK(inverse(build(Family::A, n)) ==
              build(Family::M, n) * inverse(build(Family::AM, n)));
}

TEST_CASE("block recursion of the AM inverse") {
    // AM_n^-1 = [[AM_{n-1}^-1, 0], [C, -C]] with C = (AM_{n-1} + BM_{n-1})^-1
    for (int n = 1; n <= 5; ++n) {
        ExactMatrix inv = inverse(build(Family::AM, n));
        ExactMatrix c = inverse(build(Family::AM, n - 1) + build(Family::BM, n - 1));
        ExactMatrix top = inverse(build(Family::AM, n - 1));
        std::size_t h = c.order();
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j) {
                CHECK(inv.at(i, j) == top.at(i, j));
                CHECK(inv.at(i, j + h) == 0);
                CHECK(inv.at(i + h, j) == c.at(i, j));
                CHECK(inv.at(i + h, j + h) == -c.at(i, j));
            }
    }
}
