#include "descmat/families.hpp"

#include <map>
#include <stdexcept>

namespace descmat {

namespace {

int sign_pm(int parity) { return (parity % 2 == 0) ? 1 : -1; }

void check_cap(Family f, int n) {
    if (n < 0) throw std::domain_error("matrix index n must be nonnegative");
    if (n > build_cap(f))
        throw std::domain_error("family " + family_name(f) + " capped at n = " +
                                std::to_string(build_cap(f)));
}

// dest[row_off.., col_off..] += scale * block
void place(ExactMatrix& dest, const ExactMatrix& block, std::size_t row_off, std::size_t col_off,
           const BigRational& scale) {
    for (std::size_t i = 0; i < block.order(); ++i)
        for (std::size_t j = 0; j < block.order(); ++j) {
            if (block.at(i, j) == 0) continue;
            dest.at(row_off + i, col_off + j) += scale * block.at(i, j);
        }
}

ExactMatrix one_by_one() {
    ExactMatrix m(1);
    m.at(0, 0) = 1;
    return m;
}

// (A_n, B_n):  A = [[A, A], [A, -B]],  B = [[A, A], [0, -B]]
std::pair<ExactMatrix, ExactMatrix> build_ab(int n) {
    ExactMatrix a = one_by_one(), b = one_by_one();
    for (int k = 1; k <= n; ++k) {
        std::size_t h = a.order();
        ExactMatrix na(2 * h), nb(2 * h);
        place(na, a, 0, 0, 1);
        place(na, a, 0, h, 1);
        place(na, a, h, 0, 1);
        place(na, b, h, h, -1);
        place(nb, a, 0, 0, 1);
        place(nb, a, 0, h, 1);
        place(nb, b, h, h, -1);
        a = std::move(na);
        b = std::move(nb);
    }
    return {std::move(a), std::move(b)};
}

// (AM_n, BM_n):  AM = [[AM, 0], [AM, -(AM+BM)]],  BM = [[AM, 0], [0, -BM]]
std::pair<ExactMatrix, ExactMatrix> build_ambm(int n) {
    ExactMatrix am = one_by_one(), bm = one_by_one();
    for (int k = 1; k <= n; ++k) {
        std::size_t h = am.order();
        ExactMatrix nam(2 * h), nbm(2 * h);
        place(nam, am, 0, 0, 1);
        place(nam, am, h, 0, 1);
        place(nam, am, h, h, -1);
        place(nam, bm, h, h, -1);
        place(nbm, am, 0, 0, 1);
        place(nbm, bm, h, h, -1);
        am = std::move(nam);
        bm = std::move(nbm);
    }
    return {std::move(am), std::move(bm)};
}

// Doubling step shared by H, Z, M, HM: [[X, tr*X], [bl*X, br*X]] with zero
// blocks skipped.
ExactMatrix build_simple(int n, const BigRational& tr, const BigRational& bl,
                         const BigRational& br) {
    ExactMatrix m = one_by_one();
    for (int k = 1; k <= n; ++k) {
        std::size_t h = m.order();
        ExactMatrix nm(2 * h);
        place(nm, m, 0, 0, 1);
        if (tr != 0) place(nm, m, 0, h, tr);
        if (bl != 0) place(nm, m, h, 0, bl);
        place(nm, m, h, h, br);
        m = std::move(nm);
    }
    return m;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::H: return "H";
        case Family::Z: return "Z";
        case Family::M: return "M";
        case Family::AM: return "AM";
        case Family::BM: return "BM";
        case Family::HM: return "HM";
    }
    throw std::logic_error("unreachable");
}

Family family_from_string(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "H") return Family::H;
    if (name == "Z") return Family::Z;
    if (name == "M") return Family::M;
    if (name == "AM") return Family::AM;
    if (name == "BM") return Family::BM;
    if (name == "HM") return Family::HM;
    throw std::invalid_argument("unknown matrix family: " + name);
}

int build_cap(Family f) {
    switch (f) {
        case Family::AM:
        case Family::BM:
        case Family::HM: return kProductFamilyCap;
        default: return kBaseFamilyCap;
    }
}

ExactMatrix build(Family f, int n) {
    check_cap(f, n);
    switch (f) {
        case Family::A: return build_ab(n).first;
        case Family::B: return build_ab(n).second;
        case Family::H: return build_simple(n, 1, 1, -1);
        case Family::Z: return build_simple(n, 1, 0, 1);
        case Family::M: return build_simple(n, -1, 0, 1);
        case Family::AM: return build_ambm(n).first;
        case Family::BM: return build_ambm(n).second;
        case Family::HM: return build_simple(n, 0, 1, -2);
    }
    throw std::logic_error("unreachable");
}

BigRational entry(Family f, const Subset& I, const Subset& J) {
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("entry indices live in different power sets");
    const int n = I.ambient();
    switch (f) {
        case Family::H: return sign_pm(I.intersect(J).size());
        case Family::A:
            return prefix_compatible(I, J) ? BigRational(sign_pm(I.intersect(J).size())) : 0;
        case Family::B: {
            bool last_ok = !(I.contains(n) && !J.contains(n));  // n not in I \ J
            return (prefix_compatible(I, J) && last_ok)
                       ? BigRational(sign_pm(I.intersect(J).size()))
                       : 0;
        }
        case Family::Z: return I.subset_of(J) ? 1 : 0;
        case Family::M: return I.subset_of(J) ? BigRational(sign_pm(J.minus(I).size())) : 0;
        case Family::HM:
            if (!J.subset_of(I)) return 0;
            return BigRational(int_pow(BigInt(-2), J.size()));
        case Family::AM:
        case Family::BM: {
            if (!J.subset_of(I)) return 0;
            if (f == Family::BM && fin(J) != fin(I)) return 0;
            std::vector<Run> jruns = runs(J);
            std::size_t active = jruns.size();
            if (f == Family::BM && I.contains(n)) --active;  // last run excluded
            BigInt value = 1;
            for (std::size_t k = 0; k < active; ++k)
                if (!I.contains(jruns[k].below())) value *= jruns[k].len + 1;
            return BigRational(sign_pm(J.size()) * value);
        }
    }
    throw std::logic_error("unreachable");
}

ExactMatrix build_explicit(Family f, int n) {
    check_cap(f, n);
    std::size_t order = std::size_t{1} << n;
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        Subset I = subset_from_ord(i, n);
        for (std::size_t j = 0; j < order; ++j)
            m.at(i, j) = entry(f, I, subset_from_ord(j, n));
    }
    return m;
}

BigInt det_closed(Family f, int n) {
    if (n < 0) throw std::domain_error("matrix index n must be nonnegative");
    if (f != Family::A && f != Family::B && f != Family::H)
        throw std::invalid_argument("closed-form determinant only for A, B, H");
    if (n == 0) return 1;
    if (n == 1) return f == Family::B ? -1 : -2;
    if (f == Family::H)
        return int_pow(BigInt(2), (std::uint64_t{1} << (n - 1)) * static_cast<unsigned>(n));
    const int offset = f == Family::A ? 4 : 2;  // exponent factor (n+4-k) vs (n+2-k)
    BigInt result = f == Family::A ? n + 1 : 1;
    for (int k = 1; k <= n; ++k) {
        // exponent = 2^(n-1-k) * (n+offset-k), an integer even when n-1-k = -1
        BigRational exponent(n + offset - k);
        int shift = n - 1 - k;
        if (shift >= 0)
            exponent *= BigInt(std::uint64_t{1} << shift);
        else
            exponent /= BigInt(std::uint64_t{1} << (-shift));
        if (!is_integer(exponent))
            throw std::logic_error("determinant exponent failed to be integral");
        result *= int_pow(BigInt(k), exponent.get_num().get_ui());
    }
    return result;
}

std::vector<EigenPair> eigen_multiset(Family f, int n) {
    if (f != Family::A && f != Family::B)
        throw std::invalid_argument("eigenvalue multiset only for A, B");
    if (n < 0) throw std::domain_error("matrix index n must be nonnegative");
    std::vector<EigenPair> out;
    for (const Composition& mu : compositions_of(n)) {
        BigInt value = 1;
        int parts = mu.length() - (f == Family::B ? 1 : 0);
        for (int i = 0; i < parts; ++i) value *= mu.parts()[i] + 1;
        out.push_back(EigenPair{mu, value});
    }
    return out;
}

BigRational am_inverse_entry(const Subset& I, const Subset& J) {
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("entry indices live in different power sets");
    if (!J.subset_of(I)) return 0;
    BigInt numer = 1, denom = 1;
    for (const Run& r : runs(I)) {
        denom *= factorial(static_cast<unsigned long>(r.len) + 1);
        for (int i = r.lo; i <= r.max(); ++i)
            if (J.contains(i)) numer *= r.max() - i + 1;
    }
    return make_rational(sign_pm(J.size()) * numer, denom);
}

ExactMatrix mx_matrix(int n, const BigRational& x) {
    check_cap(Family::AM, n);
    auto [am, bm] = build_ambm(n);
    return am.scaled(x) + bm.scaled(1 - x);
}

BigRational mx_inverse_entry(const Subset& I, const Subset& J, const BigRational& x) {
    if (x <= 0) throw std::domain_error("M_n(x) inverse entries require x > 0");
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("entry indices live in different power sets");
    const int n = I.ambient();
    if (!J.subset_of(I)) return 0;
    BigRational value = sign_pm(J.size());
    for (const Run& r : runs(I)) {
        bool has_n = r.max() == n;
        for (int i = r.lo; i <= r.max(); ++i) {
            BigRational d, e;
            if (has_n) {
                d = J.contains(i) ? BigRational((r.max() - i) * x + 1) : x;
                e = (r.max() - i + 1) * x + 1;
            } else {
                d = J.contains(i) ? BigRational(r.max() - i + 1) : 1;
                e = r.max() - i + 2;
            }
            value *= d / e;
        }
    }
    return value;
}

BigInt diag_seq(std::uint64_t m) {
    std::map<std::uint64_t, BigInt> memo;
    auto rec = [&](auto&& self, std::uint64_t v) -> const BigInt& {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        BigInt result;
        if (v == 0)
            result = 1;
        else if (v % 2 == 0)
            result = self(self, v / 2);
        else if (v % 4 == 1)
            result = 2 * self(self, (v - 1) / 2);
        else
            result = 2 * self(self, (v - 1) / 2) - self(self, (v - 3) / 4);
        return memo.emplace(v, std::move(result)).first->second;
    };
    return rec(rec, m);
}

bool binomial_is_odd(std::uint64_t a, std::uint64_t b) {
    if (b > a) return false;
    return (b & (a - b)) == 0;  // no carries when adding b and a-b in base 2
}

BigInt diag_seq_binomial(std::uint64_t m) {
    BigInt count = 0;
    for (std::uint64_t k = 0; k <= m; ++k)
        if (binomial_is_odd(m + k, m - k) && binomial_is_odd(m, k)) ++count;
    return count;
}

RowSums row_sum_closed(Family f, const Subset& I) {
    const int n = I.ambient();
    BigInt signed_sum = sign_pm(I.size());
    BigInt abs_sum = 1;
    switch (f) {
        case Family::HM: abs_sum = int_pow(BigInt(3), I.size()); break;
        case Family::AM:
        case Family::BM: {
            Composition lambda = subset_to_composition(I, n + 1);
            int parts = lambda.length() - (f == Family::BM ? 1 : 0);
            for (int i = 0; i < parts; ++i)
                abs_sum *= int_pow(BigInt(2), lambda.parts()[i]) - 1;
            break;
        }
        default: throw std::invalid_argument("closed-form row sums only for AM, BM, HM");
    }
    return RowSums{std::move(signed_sum), std::move(abs_sum)};
}

BigInt col_abs_sum_closed(Family f, const Subset& J) {
    const int n = J.ambient();
    switch (f) {
        case Family::HM: return int_pow(BigInt(2), n);
        case Family::AM:
        case Family::BM: {
            Composition mu = subset_to_composition(J, n + 1);
            std::vector<int> starred = mu.parts();
            starred[0] -= 1;  // mu*_1 = mu_1 - 1 (may legitimately reach 0)
            int parts = static_cast<int>(starred.size()) - (f == Family::BM ? 1 : 0);
            BigInt result = 1;
            for (int i = 0; i < parts; ++i) result *= starred[i] + 1;
            return result;
        }
        default: throw std::invalid_argument("closed-form column sums only for AM, BM, HM");
    }
}

}  // namespace descmat
