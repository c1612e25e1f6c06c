#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <unordered_set>

#include "latin/autotopy.hpp"
#include "latin/census.hpp"
#include "latin/fixtures.hpp"

using namespace latin;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_one_line(std::move(img));
}

}  // namespace

TEST_CASE("candidate triples: count, first element, reduced images") {
    const LatinSquare z5 = cyclic_table(5);
    long long count = 0;
    bool first = true;
    for_each_candidate_triple(z5, [&](const Isotopism& t) {
        if (first) {
            CHECK(t.is_identity());  // (alpha, j) = (id, 1) since sigma_1 = pi_1 = id
            first = false;
        }
        CHECK(is_reduced(apply_isotopism(t, z5)));
        ++count;
    });
    CHECK(count == 5 * factorial(5));
    CHECK_THROWS_AS(for_each_candidate_triple(parse_square("2 1 1 2"), [](const Isotopism&) {}),
                    validation_error);
}

TEST_CASE("candidate triples are pairwise distinct") {
    std::set<Isotopism> seen;
    for_each_candidate_triple(cyclic_table(4), [&](const Isotopism& t) { seen.insert(t); });
    CHECK(seen.size() == static_cast<std::size_t>(4 * factorial(4)));
}

TEST_CASE("autotopy group of the cyclic table of order 5 has order 100") {
    const AutotopyGroup g = autotopy_bruteforce(cyclic_table(5));
    CHECK(g.order() == 100);
    verify_group(g, cyclic_table(5));
    CHECK(autotopy_cycle(cyclic_table(5)).order() == 100);
    CHECK(autotopy_pruned(cyclic_table(5)).order() == 100);
    // Eq. (1): 600/100 = 6 reduced squares isotopic to Z_5; with the 50-member
    // (1,1) class this partitions all 56 reduced squares of order 5
    std::unordered_set<std::string> images;
    for_each_candidate_triple(cyclic_table(5), [&](const Isotopism& t) {
        images.insert(grid_key(apply_isotopism(t, cyclic_table(5))));
    });
    CHECK(images.size() == 6);
}

TEST_CASE("worked squares give 216, 3 and 72 under all three algorithms") {
    const std::vector<std::pair<LatinSquare, long long>> cases = {
        {fixtures::order6_type33(), 216},
        {fixtures::order7_cycle_example(), 3},
        {fixtures::order6_group_like(), 72},
    };
    for (const auto& [sq, want] : cases) {
        const AutotopyGroup brute = autotopy_bruteforce(sq);
        CHECK(brute.order() == want);
        CHECK(autotopy_cycle(sq).elements == brute.elements);
        CHECK(autotopy_pruned(sq).elements == brute.elements);
        verify_group(brute, sq);
    }
}

TEST_CASE("profiles and matching rows of the order-7 example") {
    const LatinSquare sq = fixtures::order7_cycle_example();
    const CandidateProfile base = build_profile(sq);
    REQUIRE(base.types.size() == 4);
    CHECK(base.multiplicities == std::vector<int>{1, 3, 1, 2});
    CHECK(base.row_sets[0] == std::vector<int>{1});        // identity type
    CHECK(base.row_sets[1] == std::vector<int>{2, 4, 5});  // (3,2,2)
    CHECK(base.row_sets[2] == std::vector<int>{7});        // (5,2)
    CHECK(base.row_sets[3] == std::vector<int>{3, 6});     // (7)
    CHECK(matching_rows(sq) == std::vector<int>{1, 4, 5});
    const CandidateProfile shifted = shifted_profile(sq, 4);
    CHECK(shifted.matches(base));
    CHECK(shifted.row_sets[0] == std::vector<int>{4});
    CHECK(shifted.row_sets[1] == std::vector<int>{1, 3, 5});
    CHECK(shifted.row_sets[2] == std::vector<int>{7});
    CHECK(shifted.row_sets[3] == std::vector<int>{2, 6});
    CHECK_FALSE(shifted_profile(sq, 2).matches(base));
}

TEST_CASE("alpha candidates: count, alpha(k)=1, class preservation") {
    const LatinSquare sq = fixtures::order7_cycle_example();
    for (int k : matching_rows(sq)) {
        const auto alphas = alpha_candidates(sq, k);
        CHECK(alphas.size() == 12);  // 2! * 3! with two singleton classes
        std::set<Permutation> distinct(alphas.begin(), alphas.end());
        CHECK(distinct.size() == alphas.size());
        for (const auto& a : alphas) CHECK(a(k) == 1);
    }
    CHECK_THROWS_AS(alpha_candidates(sq, 2), validation_error);
}

TEST_CASE("pruned survivors at k=4 appear only at columns 2 and 4") {
    const LatinSquare sq = fixtures::order7_cycle_example();
    Diagnostics diag;
    const auto survivors = pruned_survivors(sq, 4, &diag);
    REQUIRE(survivors.size() == 7);
    CHECK(survivors[1].size() == 1);
    CHECK(survivors[1][0] == parse_cycles("(1,4)(2,3)", 7));
    CHECK(survivors[3].size() == 1);
    CHECK(survivors[3][0] == parse_cycles("(1,5,4)(2,6,3)", 7));
    for (int j : {1, 3, 5, 6, 7}) CHECK(survivors[static_cast<std::size_t>(j - 1)].empty());
    CHECK(diag.candidates_considered == 7 * 10);  // (5,2) type: 1! * 1! * 5 * 2 alignments per column
}

TEST_CASE("groups transport under isotopism by conjugation") {
    std::mt19937 rng(11);
    const LatinSquare sq = fixtures::order7_cycle_example();
    const AutotopyGroup base = autotopy_bruteforce(sq);
    for (int trial = 0; trial < 10; ++trial) {
        const Isotopism t(random_perm(7, rng), random_perm(7, rng), random_perm(7, rng));
        const LatinSquare scrambled = apply_isotopism(t, sq);
        const AutotopyGroup g = autotopy_cycle(scrambled);
        CHECK(g.order() == base.order());
        verify_group(g, scrambled);
        CHECK(autotopy_pruned(scrambled).elements == g.elements);
        for (const auto& e : base.elements) CHECK(g.contains(compose(t, compose(e, inverse(t)))));
    }
}

TEST_CASE("algorithms agree on random squares of orders 5 and 6") {
    std::mt19937_64 rng(2024);
    for (int n : {5, 6})
        for (int trial = 0; trial < 10; ++trial) {
            const LatinSquare sq = jm_sample(n, jm_default_steps(n), rng);
            const AutotopyGroup brute = autotopy_bruteforce(sq);
            CHECK(autotopy_cycle(sq).elements == brute.elements);
            CHECK(autotopy_pruned(sq).elements == brute.elements);
        }
}

TEST_CASE("column and row product predicates") {
    // columns of the cyclic table are shifts, so products of columns are columns
    CHECK(has_column_product(cyclic_table(5)));
    CHECK(has_row_product(cyclic_table(5)));
    // the (3,3) example attains bound 216 = 6*6!/C(6,3), so no refinement applies
    CHECK(has_column_product(fixtures::order6_type33()));
    CHECK(has_row_product(fixtures::order6_type33()));
}

TEST_CASE("bounds dominate the group order on the worked squares") {
    for (const auto& sq : {fixtures::order6_type33(), fixtures::order7_cycle_example(),
                           fixtures::order6_group_like(), cyclic_table(5), cyclic_table(7)}) {
        const long long order = autotopy_cycle(sq).order();
        CHECK(bound_parity(sq) >= order);
        CHECK(bound_cycle(sq) >= order);
    }
    CHECK(bound_parity(fixtures::order6_type33()) == 216);
    CHECK(bound_cycle(fixtures::order6_group_like()) == 144);
}

TEST_CASE("isotopy to the cyclic table is detected") {
    std::mt19937 rng(3);
    CHECK(isotopic_to_cyclic(cyclic_table(5)));
    const Isotopism t(random_perm(5, rng), random_perm(5, rng), random_perm(5, rng));
    CHECK(isotopic_to_cyclic(apply_isotopism(t, cyclic_table(5))));
    // any (1,1) square of order 5 lies in the other isotopy class
    bool checked = false;
    enumerate_reduced(5, [&](const LatinSquare& s) {
        if (!checked && parity_type(s).k == 1) {
            CHECK_FALSE(isotopic_to_cyclic(s));
            checked = true;
        }
    });
    CHECK(checked);
}
