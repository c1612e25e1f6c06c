#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latin/perm.hpp"

using namespace latin;

namespace {

// independent sign oracle: parity of the inversion count
int sign_by_inversions(const Permutation& a) {
    int inv = 0;
    for (int i = 1; i <= a.degree(); ++i)
        for (int j = i + 1; j <= a.degree(); ++j)
            if (a(i) > a(j)) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_one_line(std::move(img));
}

}  // namespace

TEST_CASE("identity and one-line validation") {
    const Permutation id(4);
    CHECK(id.is_identity());
    for (int x = 1; x <= 4; ++x) CHECK(id(x) == x);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 2, 2}), validation_error);
    CHECK_THROWS_AS(Permutation::from_one_line({0, 1, 2}), validation_error);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 2, 4}), validation_error);
    CHECK_THROWS_AS(Permutation::from_one_line({}), validation_error);
}

TEST_CASE("composition applies the right factor first") {
    const Permutation a = parse_cycles("(1,2)", 3);
    const Permutation b = parse_cycles("(2,3)", 3);
    const Permutation ab = compose(a, b);
    // (a*b)(x) = a(b(x)): b first
    CHECK(ab(1) == 2);
    CHECK(ab(2) == 3);
    CHECK(ab(3) == 1);
}

TEST_CASE("compose, inverse and conjugate laws hold on random permutations") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
        for (int x = 1; x <= n; ++x) CHECK((a * b)(x) == a(b(x)));
        CHECK((a * inverse(a)).is_identity());
        CHECK((inverse(a) * a).is_identity());
        CHECK((a * b) * c == a * (b * c));
        CHECK(conjugate(a, b) == b * a * inverse(b));
        CHECK(cycle_type(conjugate(a, b)) == cycle_type(a));
    }
    CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), validation_error);
}

TEST_CASE("sign matches the inversion-count oracle and is multiplicative") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Permutation a = random_perm(n, rng), b = random_perm(n, rng);
        CHECK(sign(a) == sign_by_inversions(a));
        CHECK(sign(a * b) == sign(a) * sign(b));
    }
    CHECK(sign(parse_cycles("(1,2)", 5)) == -1);
    CHECK(sign(parse_cycles("(1,2,3)", 5)) == 1);
}

TEST_CASE("cycle decomposition is canonically ordered") {
    const Permutation a = parse_cycles("(2,3)(4,6,5)(1,7)", 7);
    const auto cycles = cycle_decomposition(a);
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0] == std::vector<int>{4, 6, 5});  // longest first
    CHECK(cycles[1] == std::vector<int>{1, 7});     // then by minimum element
    CHECK(cycles[2] == std::vector<int>{2, 3});
    CHECK(format_cycles(a, true) == "(4,6,5)(1,7)(2,3)");
    CHECK(format_cycles(Permutation(3)) == "(1)(2)(3)");
    CHECK(format_cycles(Permutation(3), true) == "()");
}

TEST_CASE("cycle types order by dominance of the partition") {
    const CycleType all_fixed{std::vector<int>(7, 1)};
    const CycleType t322{{3, 2, 2}};
    const CycleType t52{{5, 2}};
    const CycleType t7{{7}};
    CHECK(all_fixed < t322);
    CHECK(t322 < t52);
    CHECK(t52 < t7);
    CHECK(t322.max_part() == 3);
    CHECK(t7.str() == "(7)");
    CHECK(t322.str() == "(3,2,2)");
}

TEST_CASE("cycle and one-line text forms round-trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Permutation a = random_perm(n, rng);
        CHECK(parse_cycles(format_cycles(a), n) == a);
        CHECK(parse_cycles(format_cycles(a, true), n) == a);
        CHECK(parse_one_line(format_one_line(a)) == a);
    }
    CHECK_THROWS_AS(parse_cycles("(1,2", 3), validation_error);
    CHECK_THROWS_AS(parse_cycles("(1,1)", 3), validation_error);
    CHECK_THROWS_AS(parse_cycles("(1,4)", 3), validation_error);
    CHECK(parse_cycles("", 3).is_identity());
}
