#include "descmat/fine_sets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "descmat/characters.hpp"
#include "descmat/families.hpp"
#include "descmat/tableau.hpp"

namespace descmat {

namespace {

void check_family_n(int n) {
    if (n < 1) throw std::invalid_argument("fine families require n >= 1");
    if (n > kFineFamilyCap)
        throw std::domain_error("fine families capped at n = " + std::to_string(kFineFamilyCap));
}

}  // namespace

bool is_mu_unimodal(const Subset& J, const Composition& mu) {
    return prefix_compatible(composition_descent_set(mu), J);
}

FineFamily FineFamily::knuth_class(const Partition& shape) {
    check_family_n(shape.n());
    FineFamily f(FineKind::KnuthClass, shape.n());
    f.shape_ = shape;
    return f;
}

FineFamily FineFamily::syt(const Partition& shape) {
    check_family_n(shape.n());
    FineFamily f(FineKind::Syt, shape.n());
    f.shape_ = shape;
    return f;
}

FineFamily FineFamily::length(int n, int k) {
    check_family_n(n);
    if (k < 0 || k > n * (n - 1) / 2)
        throw std::invalid_argument("Coxeter length outside [0, n(n-1)/2]");
    FineFamily f(FineKind::Length, n);
    f.k_ = k;
    return f;
}

FineFamily FineFamily::involutions(int n) {
    check_family_n(n);
    return FineFamily(FineKind::Involutions, n);
}

FineFamily FineFamily::conj_class(const Partition& cycle_type) {
    check_family_n(cycle_type.n());
    FineFamily f(FineKind::ConjClass, cycle_type.n());
    f.shape_ = cycle_type;
    return f;
}

FineFamily FineFamily::arc(int n) {
    check_family_n(n);
    return FineFamily(FineKind::Arc, n);
}

FineFamily FineFamily::explicit_set(int n, std::vector<Permutation> members) {
    check_family_n(n);
    for (const Permutation& p : members)
        if (p.n() != n) throw std::invalid_argument("explicit member has wrong size");
    FineFamily f(FineKind::Explicit, n);
    f.members_ = std::move(members);
    return f;
}

std::string FineFamily::name() const {
    std::ostringstream os;
    switch (kind_) {
        case FineKind::KnuthClass: os << "knuth(" << shape_.to_string() << ")"; break;
        case FineKind::Syt: os << "syt(" << shape_.to_string() << ")"; break;
        case FineKind::Length: os << "length(k=" << k_ << ",n=" << n_ << ")"; break;
        case FineKind::Involutions: os << "involutions(n=" << n_ << ")"; break;
        case FineKind::ConjClass: os << "conj(" << shape_.to_string() << ")"; break;
        case FineKind::Arc: os << "arc(n=" << n_ << ")"; break;
        case FineKind::Explicit: os << "explicit(n=" << n_ << ",#" << members_.size() << ")"; break;
    }
    return os.str();
}

void for_each_member(const FineFamily& B,
                     const std::function<void(const std::string&, const Subset&)>& visit) {
    auto visit_perm = [&](const Permutation& pi) { visit(pi.to_string(), descents(pi)); };
    switch (B.kind()) {
        case FineKind::Syt:
            for_each_syt(B.shape(),
                         [&](const StandardTableau& t) { visit(t.to_string(), descents(t)); });
            return;
        case FineKind::Explicit:
            for (const Permutation& p : B.explicit_members()) visit_perm(p);
            return;
        case FineKind::KnuthClass: {
            StandardTableau p0 = StandardTableau::row_superstandard(B.shape());
            for_each_permutation(B.n(), [&](const Permutation& pi) {
                if (rsk(pi).first == p0) visit_perm(pi);
            });
            return;
        }
        case FineKind::Length:
            for_each_permutation(B.n(), [&](const Permutation& pi) {
                if (inversions(pi) == B.length_k()) visit_perm(pi);
            });
            return;
        case FineKind::Involutions:
            for_each_permutation(B.n(), [&](const Permutation& pi) {
                if (pi.is_involution()) visit_perm(pi);
            });
            return;
        case FineKind::ConjClass:
            for_each_permutation(B.n(), [&](const Permutation& pi) {
                if (cycle_type(pi) == B.shape()) visit_perm(pi);
            });
            return;
        case FineKind::Arc:
            for_each_permutation(B.n(), [&](const Permutation& pi) {
                if (is_arc_permutation(pi)) visit_perm(pi);
            });
            return;
    }
    throw std::logic_error("unreachable");
}

void for_each_descent(const FineFamily& B, const std::function<void(const Subset&)>& visit) {
    for_each_member(B, [&](const std::string&, const Subset& d) { visit(d); });
}

std::vector<Subset> descent_list(const FineFamily& B) {
    std::vector<Subset> out;
    for_each_descent(B, [&](const Subset& d) { out.push_back(d); });
    return out;
}

BigInt DescentVector::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

DescentVector descent_vector(const FineFamily& B) {
    DescentVector v;
    v.n = B.n();
    v.counts.assign(std::size_t{1} << (B.n() - 1), 0);
    for_each_descent(B, [&](const Subset& d) { ++v.counts[d.ord()]; });
    return v;
}

BigInt fine_character(const std::vector<Subset>& member_descents, const Composition& mu) {
    Subset i_mu = composition_descent_set(mu);
    BigInt total = 0;
    for (const Subset& des : member_descents) {
        if (!prefix_compatible(i_mu, des)) continue;  // not mu-unimodal
        if (des.intersect(i_mu).size() % 2 == 0)
            ++total;
        else
            --total;
    }
    return total;
}

BigInt fine_character(const FineFamily& B, const Composition& mu) {
    if (mu.n() != B.n()) throw std::invalid_argument("composition size must match the family");
    return fine_character(descent_list(B), mu);
}

CharacterVector lift_character(const DescentVector& v) {
    const int m = v.n - 1;  // subsets of [n-1]
    ExactMatrix a = build(Family::A, m);
    CharacterVector x;
    x.n = v.n;
    x.values.assign(v.counts.size(), 0);
    for (std::size_t i = 0; i < v.counts.size(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < v.counts.size(); ++j) {
            const BigRational& e = a.at(i, j);
            if (e == 0) continue;
            if (e > 0)
                acc += v.counts[j];
            else
                acc -= v.counts[j];
        }
        x.values[i] = std::move(acc);
    }
    return x;
}

CharacterVector lift_character(const FineFamily& B) { return lift_character(descent_vector(B)); }

BigRational count_superset(const CharacterVector& x, const Subset& I) {
    if (I.ambient() != x.n - 1)
        throw std::invalid_argument("superset index must be a subset of [n-1]");
    std::vector<Run> iruns = runs(I);
    BigInt sum = 0;
    // All J inside I, including the empty set.
    std::uint64_t mask = I.bits();
    std::uint64_t sub = mask;
    while (true) {
        Subset J(sub, I.ambient());
        BigInt term = x.values[J.ord()];
        for (const Run& r : iruns)
            for (int i = r.lo; i <= r.max(); ++i)
                if (J.contains(i)) term *= r.max() - i + 1;
        if (J.size() % 2 == 0)
            sum += term;
        else
            sum -= term;
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
    return make_rational(sum, parabolic_order(I));
}

BigRational count_exact(const CharacterVector& x, const Subset& D) {
    if (D.ambient() != x.n - 1)
        throw std::invalid_argument("descent index must be a subset of [n-1]");
    BigRational total = 0;
    std::uint64_t free_mask = D.complement().bits();
    std::uint64_t extra = free_mask;
    while (true) {
        Subset I(D.bits() | extra, D.ambient());
        BigRational term = count_superset(x, I);
        if (Subset(extra, D.ambient()).size() % 2 == 0)
            total += term;
        else
            total -= term;
        if (extra == 0) break;
        extra = (extra - 1) & free_mask;
    }
    return total;
}

FinenessReport fineness(const DescentVector& v, const std::string& family_name) {
    FinenessReport report;
    report.family = family_name;
    report.n = v.n;
    const int n = v.n;
    CharacterVector x = lift_character(v);

    // Class-function consistency: equal lifts across compositions sharing an
    // underlying partition.
    std::map<Partition, BigInt> by_type;
    report.consistent = true;
    for (const Composition& mu : compositions_of(n)) {
        const BigInt& value = x.values[composition_descent_set(mu).ord()];
        Partition type = underlying_partition(mu);
        auto [it, inserted] = by_type.emplace(type, value);
        if (!inserted && it->second != value) {
            report.consistent = false;
            std::ostringstream os;
            os << "chi(c_J) differs within cycle type " << type.to_string() << ": "
               << to_string(it->second) << " vs " << to_string(value) << " at mu = "
               << mu.to_string();
            report.consistency_failures.push_back(os.str());
        }
    }

    // Multiplicities by character inner products, reading x at the partition
    // compositions.
    BigInt n_fact = factorial(static_cast<unsigned long>(n));
    std::vector<Partition> parts = partitions_of(n);
    for (const Partition& nu : parts) {
        BigInt acc = 0;
        for (const Partition& mu : parts) {
            const BigInt& x_mu = x.values[composition_descent_set(mu.as_composition()).ord()];
            acc += conjugacy_class_size(mu) * x_mu * mn_character(nu, mu);
        }
        report.multiplicities[nu] = make_rational(acc, n_fact);
    }

    report.fine = report.consistent;
    for (const auto& [nu, m] : report.multiplicities)
        if (!is_integer(m) || m < 0) report.fine = false;

    if (report.fine) {
        // Re-verify the decomposition entrywise: v = sum_nu m_nu * v_SYT(nu).
        std::vector<BigInt> recon(v.counts.size(), 0);
        for (const auto& [nu, m] : report.multiplicities) {
            if (m == 0) continue;
            DescentVector w = descent_vector(FineFamily::syt(nu));
            for (std::size_t j = 0; j < recon.size(); ++j)
                recon[j] += m.get_num() * w.counts[j];
        }
        if (recon != v.counts) report.fine = false;
    }
    return report;
}

FinenessReport fineness(const FineFamily& B) { return fineness(descent_vector(B), B.name()); }

std::optional<std::map<Partition, BigRational>> solve_criterion1(const DescentVector& v) {
    const int n = v.n;
    std::vector<Partition> parts = partitions_of(n);
    const std::size_t rows = v.counts.size();
    const std::size_t cols = parts.size();

    // Augmented system [W | v], W columns = SYT descent vectors.
    std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols + 1));
    for (std::size_t c = 0; c < cols; ++c) {
        DescentVector w = descent_vector(FineFamily::syt(parts[c]));
        for (std::size_t r = 0; r < rows; ++r) a[r][c] = BigRational(w.counts[r]);
    }
    for (std::size_t r = 0; r < rows; ++r) a[r][cols] = BigRational(v.counts[r]);

    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        BigRational lead = a[rank][c];
        for (std::size_t j = c; j <= cols; ++j) a[rank][j] /= lead;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            BigRational f = a[r][c];
            for (std::size_t j = c; j <= cols; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (a[r][cols] != 0) return std::nullopt;  // inconsistent
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] == SIZE_MAX) return std::nullopt;  // underdetermined

    std::map<Partition, BigRational> out;
    for (std::size_t c = 0; c < cols; ++c) out[parts[c]] = a[pivot_of_col[c]][cols];
    return out;
}

EquidistributionReport equidistribution_fs_ls(int n) {
    if (n < 1 || n > 9)
        throw std::domain_error("equidistribution check supported for 1 <= n <= 9");
    EquidistributionReport report;
    report.n = n;
    report.max_length = n * (n - 1) / 2;
    const std::size_t vec_len = std::size_t{1} << (n - 1);

    // One scan: joint distributions of Des against length and against
    // maj(pi^-1), plus the per-length descent lists for part (b).
    std::vector<std::vector<BigInt>> by_length(report.max_length + 1,
                                               std::vector<BigInt>(vec_len, 0));
    std::vector<std::vector<BigInt>> by_maj_inv(report.max_length + 1,
                                                std::vector<BigInt>(vec_len, 0));
    std::vector<std::vector<Subset>> descents_by_length(report.max_length + 1);
    for_each_permutation(n, [&](const Permutation& pi) {
        Subset d = descents(pi);
        int len = inversions(pi);
        int maj_inv = major_index(pi.inverse());
        ++by_length[len][d.ord()];
        ++by_maj_inv[maj_inv][d.ord()];
        descents_by_length[len].push_back(d);
    });
    report.joint_distributions_equal = by_length == by_maj_inv;

    // m_{k,lambda} = #SYT(lambda) with maj k.
    std::vector<Partition> parts = partitions_of(n);
    std::map<Partition, std::vector<BigInt>> maj_counts;
    for (const Partition& lambda : parts) {
        std::vector<BigInt> counts(report.max_length + 1, 0);
        for_each_syt(lambda, [&](const StandardTableau& t) {
            int maj = major_index(t);
            if (maj <= report.max_length) ++counts[maj];
        });
        maj_counts[lambda] = std::move(counts);
    }

    report.coinvariant_characters_match = true;
    for (int k = 0; k <= report.max_length && report.coinvariant_characters_match; ++k) {
        for (const Composition& mu : compositions_of(n)) {
            BigInt lhs = fine_character(descents_by_length[k], mu);
            BigInt rhs = 0;
            Partition type = underlying_partition(mu);
            for (const Partition& lambda : parts)
                rhs += maj_counts[lambda][k] * mn_character(lambda, type);
            if (lhs != rhs) {
                report.coinvariant_characters_match = false;
                break;
            }
        }
    }
    return report;
}

}  // namespace descmat
