#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "descmat/characters.hpp"
#include "descmat/fine_sets.hpp"
#include "descmat/permutation.hpp"
#include "descmat/tableau.hpp"

using namespace descmat;

namespace {

// Position-by-position comparison, independent of the bitmask path.
std::vector<int> descent_positions_brute(const Permutation& pi) {
    std::vector<int> out;
    for (int i = 1; i < pi.n(); ++i)
        if (pi(i) > pi(i + 1)) out.push_back(i);
    return out;
}

// Cyclic-interval test by sorting residues and counting gaps.
bool is_arc_brute(const Permutation& pi) {
    const int n = pi.n();
    for (int k = 1; k < n; ++k) {
        std::vector<int> residues;
        for (int i = 1; i <= k; ++i) residues.push_back(pi(i) % n);
        std::sort(residues.begin(), residues.end());
        int gaps = 0;
        for (int i = 0; i < k; ++i) {
            int next = residues[(i + 1) % k] + (i + 1 == k ? n : 0);
            if (next - residues[i] > 1) ++gaps;
        }
        if (k < n && gaps > 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("descent sets of permutations") {
    Permutation zigzag({9, 3, 6, 8, 7, 1, 2, 5, 4});
    CHECK(descent_positions_brute(zigzag) == std::vector<int>({1, 4, 5, 8}));
    CHECK(descents(zigzag) == Subset::of({1, 4, 5, 8}, 8));

    CHECK(descents(Permutation::identity(5)) == Subset::empty(4));
    CHECK(descents(Permutation({5, 4, 3, 2, 1})) == Subset::full(4));

    for_each_permutation(6, [](const Permutation& pi) {
        std::vector<int> brute = descent_positions_brute(pi);
        CHECK(descents(pi) == Subset::from_elements(brute, 5));
    });
}

TEST_CASE("descent sets of tableaux") {
    StandardTableau t12_3({{1, 2}, {3}});
    StandardTableau t13_2({{1, 3}, {2}});
    CHECK(descents(t12_3) == Subset::of({2}, 2));
    CHECK(descents(t13_2) == Subset::of({1}, 2));
    CHECK(descents(StandardTableau({{1, 2, 3, 4}})) == Subset::empty(3));
    CHECK(descents(StandardTableau({{1}, {2}, {3}, {4}})) == Subset::full(3));
}

TEST_CASE("mu-unimodality") {
    Subset des = descents(Permutation({9, 3, 6, 8, 7, 1, 2, 5, 4}));
    CHECK(is_mu_unimodal(des, Composition({4, 3, 2})));
    CHECK_FALSE(is_mu_unimodal(des, Composition({5, 4})));

    for (int n = 1; n <= 6; ++n)
        for (const Composition& mu : compositions_of(n)) {
            CHECK(is_mu_unimodal(Subset::empty(n - 1), mu));
            CHECK(is_mu_unimodal(subset_from_ord((1u << (n - 1)) - 1, n - 1),
                                 Composition(std::vector<int>(n, 1))));
        }
}

TEST_CASE("RSK basics") {
    auto [p_id, q_id] = rsk(Permutation::identity(3));
    CHECK(p_id == StandardTableau({{1, 2, 3}}));
    CHECK(q_id == StandardTableau({{1, 2, 3}}));

    auto [p_rev, q_rev] = rsk(Permutation({3, 2, 1}));
    CHECK(p_rev == StandardTableau({{1}, {2}, {3}}));
    CHECK(q_rev == StandardTableau({{1}, {2}, {3}}));
}

TEST_CASE("RSK is a shape-preserving bijection with descent compatibility") {
    for (int n = 1; n <= 7; ++n) {
        std::map<Partition, BigInt> pairs_by_shape;
        std::map<std::pair<StandardTableau, StandardTableau>, int> seen;
        BigInt total = 0;
        for_each_permutation(n, [&](const Permutation& pi) {
            auto [p, q] = rsk(pi);
            REQUIRE(p.shape() == q.shape());
            CHECK(descents(pi) == descents(q));
            CHECK(descents(pi.inverse()) == descents(p));
            ++pairs_by_shape[p.shape()];
            ++seen[{p, q}];
            ++total;
        });
        CHECK(total == factorial(n));
        for (const auto& [shape, count] : pairs_by_shape) {
            BigInt syt = count_syt(shape);
            CHECK(count == syt * syt);
        }
        for (const auto& [pq, count] : seen) CHECK(count == 1);
    }
}

TEST_CASE("SYT enumeration") {
    CHECK(count_syt(Partition({2, 1})) == 2);
    CHECK(count_syt(Partition({2, 2})) == 2);
    CHECK(count_syt(Partition({3, 2})) == 5);
    CHECK(count_syt(Partition({4})) == 1);
    CHECK(StandardTableau::row_superstandard(Partition({2, 1})) ==
          StandardTableau({{1, 2}, {3}}));
    CHECK(StandardTableau({{1, 2}, {3}}).to_string() == "[[1,2],[3]]");
    // descent multiset of SYT((2,2)) is {{2},{1,3}}
    std::vector<Subset> des;
    for_each_syt(Partition({2, 2}), [&](const StandardTableau& t) { des.push_back(descents(t)); });
    REQUIRE(des.size() == 2);
    CHECK(((des[0] == Subset::of({2}, 3) && des[1] == Subset::of({1, 3}, 3)) ||
           (des[1] == Subset::of({2}, 3) && des[0] == Subset::of({1, 3}, 3))));
}

TEST_CASE("Coxeter elements") {
    CHECK(coxeter_element(Subset::empty(3), 4) == Permutation::identity(4));
    CHECK(coxeter_element(Subset::full(3), 4) == Permutation({2, 3, 4, 1}));
    CHECK(cycle_type(coxeter_element(Subset::full(3), 4)) == Partition({4}));

    Subset j = composition_descent_set(Composition({3, 4, 2, 5}));
    CHECK(cycle_type(coxeter_element(j, 14)) == Partition({5, 4, 3, 2}));

    for (int n = 1; n <= 9; ++n)
        for (const Composition& mu : compositions_of(n))
            CHECK(cycle_type(coxeter_element(composition_descent_set(mu), n)) ==
                  underlying_partition(mu));
}

TEST_CASE("Murnaghan-Nakayama values") {
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
    for (const Partition& mu : partitions_of(6)) CHECK(mn_character(Partition({6}), mu) == 1);

    // sign character
    for (const Partition& mu : partitions_of(5))
        CHECK(mn_character(Partition({1, 1, 1, 1, 1}), mu) ==
              ((5 - mu.length()) % 2 == 0 ? 1 : -1));

    // classical S_4 table, columns (1^4), (2,1,1), (2,2), (3,1), (4)
    const std::vector<std::pair<Partition, std::vector<long>>> s4 = {
        {Partition({4}), {1, 1, 1, 1, 1}},
        {Partition({3, 1}), {3, 1, -1, 0, -1}},
        {Partition({2, 2}), {2, 0, 2, -1, 0}},
        {Partition({2, 1, 1}), {3, -1, -1, 0, 1}},
        {Partition({1, 1, 1, 1}), {1, -1, 1, 1, -1}},
    };
    const std::vector<Partition> cols = {Partition({1, 1, 1, 1}), Partition({2, 1, 1}),
                                         Partition({2, 2}), Partition({3, 1}), Partition({4})};
    for (const auto& [lambda, values] : s4)
        for (std::size_t c = 0; c < cols.size(); ++c)
            CHECK(mn_character(lambda, cols[c]) == values[c]);
}

TEST_CASE("character orthogonality and dimensions") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Partition> parts = partitions_of(n);
        BigInt n_fact = factorial(n);
        for (const Partition& la : parts) {
            CHECK(mn_character(la, Partition(std::vector<int>(n, 1))) == count_syt(la));
            for (const Partition& lb : parts) {
                BigInt acc = 0;
                for (const Partition& mu : parts)
                    acc += conjugacy_class_size(mu) * mn_character(la, mu) * mn_character(lb, mu);
                CHECK(acc == (la == lb ? n_fact : BigInt(0)));
            }
        }
        // class sizes partition the group
        BigInt class_total = 0;
        for (const Partition& mu : parts) class_total += conjugacy_class_size(mu);
        BigInt type_count = 0;
        for_each_permutation(std::min(n, 6), [&](const Permutation&) { ++type_count; });
        if (n <= 6) CHECK(class_total == type_count);
    }
    CHECK(zee(Partition({2, 2, 1})) == 8);  // 2^2 * 2! * 1^1 * 1!
    CHECK(conjugacy_class_size(Partition({3})) == 2);
}

TEST_CASE("length and major index") {
    CHECK(length_and_maj(Permutation::identity(4)).length == 0);
    CHECK(length_and_maj(Permutation::identity(4)).maj == 0);
    LengthMaj rev = length_and_maj(Permutation({3, 2, 1}));
    CHECK(rev.length == 3);
    CHECK(rev.maj == 3);

    // MacMahon equidistribution: maj and length have the same distribution
    for (int n = 1; n <= 6; ++n) {
        std::map<int, int> by_len, by_maj;
        for_each_permutation(n, [&](const Permutation& pi) {
            LengthMaj lm = length_and_maj(pi);
            ++by_len[lm.length];
            ++by_maj[lm.maj];
        });
        CHECK(by_len == by_maj);
    }
}

TEST_CASE("arc permutations") {
    int count3 = 0;
    for_each_permutation(3, [&](const Permutation& pi) {
        CHECK(is_arc_permutation(pi));
        ++count3;
    });
    CHECK(count3 == 6);

    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            CHECK(is_arc_permutation(pi) == is_arc_brute(pi));
        });

    CHECK(is_arc_permutation(Permutation({1, 2, 3, 4})));   // prefixes are initial intervals
    CHECK_FALSE(is_arc_permutation(Permutation({2, 4, 1, 3})));
}

TEST_CASE("permutation plumbing") {
    Permutation p({2, 3, 1});
    CHECK(p.inverse() == Permutation({3, 1, 2}));
    CHECK(p.compose(p.inverse()) == Permutation::identity(3));
    CHECK(Permutation({2, 1, 3}).is_involution());
    CHECK_FALSE(p.is_involution());
    CHECK(parse_permutation("213") == Permutation({2, 1, 3}));
    CHECK(parse_permutation("2,1,3") == Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK(cycle_type(Permutation({2, 1, 4, 3, 5})) == Partition({2, 2, 1}));
}
