#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "descmat/composition.hpp"
#include "descmat/permutation.hpp"
#include "descmat/rational.hpp"
#include "descmat/subset.hpp"

namespace descmat {

/// True iff each run of J intersected with I(mu) is a prefix of that run of
/// I(mu); a permutation is mu-unimodal exactly when its descent set is.
bool is_mu_unimodal(const Subset& J, const Composition& mu);

/// Enumerable families of combinatorial objects carrying descent sets.
enum class FineKind { KnuthClass, Syt, Length, Involutions, ConjClass, Arc, Explicit };

/// Exhaustive S_n scans stay comfortable up to here.
inline constexpr int kFineFamilyCap = 10;

class FineFamily {
public:
    static FineFamily knuth_class(const Partition& shape);
    static FineFamily syt(const Partition& shape);
    static FineFamily length(int n, int k);
    static FineFamily involutions(int n);
    static FineFamily conj_class(const Partition& cycle_type);
    static FineFamily arc(int n);
    static FineFamily explicit_set(int n, std::vector<Permutation> members);

    FineKind kind() const { return kind_; }
    int n() const { return n_; }
    const Partition& shape() const { return shape_; }
    int length_k() const { return k_; }
    const std::vector<Permutation>& explicit_members() const { return members_; }

    /// "syt(2,1)", "length(k=2,n=4)", "involutions(n=3)", ...
    std::string name() const;

private:
    FineFamily(FineKind kind, int n) : kind_(kind), n_(n) {}
    FineKind kind_;
    int n_;
    Partition shape_;
    int k_ = -1;
    std::vector<Permutation> members_;
};

/// Visits each member once: its printable form (one-line permutation word or
/// tableau row lists) together with its descent set.
void for_each_member(const FineFamily& B,
                     const std::function<void(const std::string&, const Subset&)>& visit);

/// Visits the descent set of each member, once per member.
void for_each_descent(const FineFamily& B, const std::function<void(const Subset&)>& visit);

/// Materialized descent sets, one per member (with multiplicity).
std::vector<Subset> descent_list(const FineFamily& B);

/// Exact counts v_J = |{b in B : Des(b) = J}| indexed by ord(J), J in P_{n-1}.
struct DescentVector {
    int n = 0;
    std::vector<BigInt> counts;  ///< length 2^(n-1)
    BigInt total() const;
    bool operator==(const DescentVector&) const = default;
};

DescentVector descent_vector(const FineFamily& B);

/// The defining signed sum over members whose descent set is mu-unimodal:
/// sum of (-1)^{|Des(b) cap I(mu)|}.
BigInt fine_character(const std::vector<Subset>& member_descents, const Composition& mu);
BigInt fine_character(const FineFamily& B, const Composition& mu);

/// chi(c_J) indexed by ord(J), J in P_{n-1}.
struct CharacterVector {
    int n = 0;
    std::vector<BigInt> values;  ///< length 2^(n-1)
    bool operator==(const CharacterVector&) const = default;
};

/// x = A_{n-1} v: the character values of the representation carried by a fine
/// set, evaluated at the Coxeter elements c_J.
CharacterVector lift_character(const DescentVector& v);
CharacterVector lift_character(const FineFamily& B);

/// |{b : Des(b) contains I}| recovered from character values alone:
/// (1/|<I>|) sum over J inside I of (-1)^|J| chi(c_J) prod_k prod_{i in I_k
/// cap J} (max(I_k) - i + 1). Rational (and possibly non-integral) when x does
/// not come from a fine set, which is how callers detect that.
BigRational count_superset(const CharacterVector& x, const Subset& I);

/// |{b : Des(b) = D}| by inclusion-exclusion over count_superset.
BigRational count_exact(const CharacterVector& x, const Subset& D);

struct FinenessReport {
    std::string family;
    int n = 0;
    bool consistent = false;  ///< lift constant on cycle types
    std::vector<std::string> consistency_failures;
    std::map<Partition, BigRational> multiplicities;
    bool fine = false;  ///< consistent + all multiplicities nonnegative integers
};

/// Consistency, irreducible multiplicities (character inner products), and the
/// fineness verdict; when fine, the decomposition is re-verified entrywise
/// against SYT descent vectors.
FinenessReport fineness(const DescentVector& v, const std::string& family_name = "");
FinenessReport fineness(const FineFamily& B);

/// Multiplicities by exact linear solve of
///   sum_nu m_nu * descent_vector(SYT(nu)) = v
/// (cross-check route for the inner-product extraction); nullopt when the
/// system is inconsistent.
std::optional<std::map<Partition, BigRational>> solve_criterion1(const DescentVector& v);

struct EquidistributionReport {
    int n = 0;
    int max_length = 0;
    /// Joint (Des, length) distribution equals joint (Des, maj of inverse).
    bool joint_distributions_equal = false;
    /// fine_character(length k) matches sum over lambda of
    /// #{T in SYT(lambda) : maj(T) = k} * chi^lambda, for every k and mu.
    bool coinvariant_characters_match = false;
    bool pass() const { return joint_distributions_equal && coinvariant_characters_match; }
};

EquidistributionReport equidistribution_fs_ls(int n);

}  // namespace descmat
