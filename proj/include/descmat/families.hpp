#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descmat/composition.hpp"
#include "descmat/matrix.hpp"
#include "descmat/subset.hpp"

namespace descmat {

/// The coupled Walsh-Hadamard-type families and their Mobius transforms.
/// A, B: the asymmetric variants; H: Sylvester; Z: zeta matrix of inclusion;
/// M = Z^-1: Mobius matrix; AM = A*M, BM = B*M, HM = H*M.
enum class Family { A, B, H, Z, M, AM, BM, HM };

std::string family_name(Family f);
Family family_from_string(const std::string& name);

/// Base families stay cheap much longer than the transformed products.
inline constexpr int kBaseFamilyCap = 12;
inline constexpr int kProductFamilyCap = 10;
int build_cap(Family f);

/// Order-2^n matrix built by the defining block recursion.
/// Throws std::domain_error when n < 0 or n exceeds the family cap.
ExactMatrix build(Family f, int n);

/// Closed-form entry (I, J), both subsets of [n]; no matrix is materialized.
BigRational entry(Family f, const Subset& I, const Subset& J);

/// Order-2^n matrix filled entry-by-entry from the closed forms.
ExactMatrix build_explicit(Family f, int n);

/// Closed-form determinant for A, B, H. The formula's exponents are assembled
/// as exact rationals and must multiply out to integers.
BigInt det_closed(Family f, int n);

/// Eigenvalue descriptor: the composition mu contributes the pair +-sqrt(value).
struct EigenPair {
    Composition mu;
    BigInt value;
};

/// One pair per composition of n, in anti-lexicographic order of I(mu);
/// empty for n = 0. For A the value is prod(mu_i + 1); for B the last part is
/// excluded from the product.
std::vector<EigenPair> eigen_multiset(Family f, int n);

/// Entry (I, J) of AM_n^-1: zero unless J is a subset of I, otherwise
/// (-1)^|J| * prod_k 1/(|I_k|+1)! * prod_{i in I_k cap J} (max(I_k) - i + 1).
BigRational am_inverse_entry(const Subset& I, const Subset& J);

/// M_n(x) = x*AM_n + (1-x)*BM_n; M_n(1) = AM_n, M_n(0) = BM_n.
ExactMatrix mx_matrix(int n, const BigRational& x);

/// Entry (I, J) of M_n(x)^-1 for x > 0 (throws std::domain_error otherwise).
/// Zero unless J is a subset of I; the run containing n contributes
/// x-dependent factors, all other runs the same factors as AM_n^-1.
BigRational mx_inverse_entry(const Subset& I, const Subset& J, const BigRational& x);

/// |diagonal entry of AM_infinity| at ordinal m, via the recursion
/// a(2m) = a(m), a(4m+1) = 2*a(2m), a(4m+3) = 2*a(2m+1) - a(m) with a(0) = 1.
BigInt diag_seq(std::uint64_t m);

/// The same sequence by the binomial sum: count of k in [0, m] with both
/// C(m+k, m-k) and C(m, k) odd.
BigInt diag_seq_binomial(std::uint64_t m);

/// Parity of C(a, b) without computing it: no carries in b + (a-b) base 2.
bool binomial_is_odd(std::uint64_t a, std::uint64_t b);

struct RowSums {
    BigInt signed_sum;  ///< always (-1)^|I|
    BigInt abs_sum;
};

/// Closed-form row sums for AM, BM, HM at row I (subset of [n]); the governing
/// composition is lambda of n+1 with I(lambda) = I.
RowSums row_sum_closed(Family f, const Subset& I);

/// Closed-form column sum of absolute values for AM, BM, HM at column J; equals
/// the diagonal entry (A_n^2)_{J,J} (resp. B_n^2, H_n^2).
BigInt col_abs_sum_closed(Family f, const Subset& J);

}  // namespace descmat
