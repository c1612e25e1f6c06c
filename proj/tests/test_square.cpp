#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "latin/fixtures.hpp"
#include "latin/square.hpp"

using namespace latin;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_one_line(std::move(img));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("grid validation names the offending line") {
    CHECK_THROWS_AS(LatinSquare::from_grid(2, {1, 2, 1, 2}), validation_error);
    CHECK_THROWS_AS(LatinSquare::from_grid(2, {1, 1, 2, 2}), validation_error);
    CHECK_THROWS_AS(LatinSquare::from_grid(2, {1, 2, 2, 3}), validation_error);
    CHECK_THROWS_AS(LatinSquare::from_grid(2, {1, 2, 2}), validation_error);
    CHECK_THROWS_WITH(LatinSquare::from_grid(2, {1, 2, 1, 2}),
                      Catch::Matchers::ContainsSubstring("column"));
    CHECK_THROWS_WITH(LatinSquare::from_grid(2, {1, 1, 2, 2}),
                      Catch::Matchers::ContainsSubstring("row 1"));
    CHECK_NOTHROW(LatinSquare::from_grid(2, {1, 2, 2, 1}));
}

TEST_CASE("parse accepts the standard and the compact form") {
    const LatinSquare a = parse_square("2\n1 2\n2 1\n");
    const LatinSquare b = parse_square("1 2 2 1");
    CHECK(a == b);
    CHECK(a.order() == 2);
    CHECK_THROWS_AS(parse_square("1 2 3"), validation_error);
    CHECK_THROWS_AS(parse_square(""), validation_error);
    CHECK_THROWS_AS(parse_square("2\n1 2\n2 x\n"), validation_error);
    // order-1 squares in both forms
    CHECK(parse_square("1").order() == 1);
    CHECK(parse_square("1\n1\n").order() == 1);
}

TEST_CASE("emit and parse round-trip") {
    const LatinSquare sq = fixtures::order7_cycle_example();
    CHECK(parse_square(emit_square(sq)) == sq);
    CHECK(parse_square(emit_compact(sq)) == sq);
}

TEST_CASE("fixture files match the embedded squares") {
    CHECK(parse_square(slurp("fixtures/order6_type33.txt")) == fixtures::order6_type33());
    CHECK(parse_square(slurp("fixtures/order7_cycle_example.txt")) == fixtures::order7_cycle_example());
    CHECK(parse_square(slurp("fixtures/order6_group_like.txt")) == fixtures::order6_group_like());
}

TEST_CASE("row and column permutations follow the symbol-to-place convention") {
    const LatinSquare sq = fixtures::order7_cycle_example();
    // row 2 holds symbol 2 in place 1, symbol 1 in place 2, ...
    CHECK(row_perm(sq, 2) == parse_cycles("(1,2)(3,4)(5,7,6)", 7));
    CHECK(row_perm(sq, 7) == parse_cycles("(4,6)(1,3,5,2,7)", 7));
    CHECK(row_perm(sq, 3) == parse_cycles("(1,6,7,5,4,2,3)", 7));
    CHECK(col_perm(sq, 2) == parse_one_line("2 1 6 3 7 4 5"));
    // reduced square: row 1 and column 1 are identities
    CHECK(row_perm(sq, 1).is_identity());
    CHECK(col_perm(sq, 1).is_identity());
}

TEST_CASE("isotopism action composes correctly") {
    std::mt19937 rng(7);
    const LatinSquare sq = fixtures::order6_type33();
    for (int trial = 0; trial < 50; ++trial) {
        const Isotopism t1(random_perm(6, rng), random_perm(6, rng), random_perm(6, rng));
        const Isotopism t2(random_perm(6, rng), random_perm(6, rng), random_perm(6, rng));
        const LatinSquare once = apply_isotopism(t2 * t1, sq);
        const LatinSquare twice = apply_isotopism(t2, apply_isotopism(t1, sq));
        CHECK(once == twice);
        CHECK(apply_isotopism(inverse(t1), apply_isotopism(t1, sq)) == sq);
    }
    CHECK(apply_isotopism(Isotopism::identity(6), sq) == sq);
    CHECK_THROWS_AS(apply_isotopism(Isotopism::identity(5), sq), validation_error);
}

TEST_CASE("apply moves cell (r,c,s) to (alpha r, beta c, gamma s)") {
    const LatinSquare sq = fixtures::order6_type33();
    const Isotopism t(parse_cycles("(1,2)", 6), parse_cycles("(3,4)", 6), parse_cycles("(5,6)", 6));
    const LatinSquare out = apply_isotopism(t, sq);
    for (int r = 1; r <= 6; ++r)
        for (int c = 1; c <= 6; ++c) CHECK(out.at(t.alpha(r), t.beta(c)) == t.gamma(sq.at(r, c)));
}

TEST_CASE("reduce sorts rows then columns and reports the isotopism") {
    std::mt19937 rng(17);
    const LatinSquare sq = fixtures::order7_cycle_example();
    // reduced input: identity reduction
    const Reduction same = reduce(sq);
    CHECK(same.square == sq);
    CHECK(same.iso.is_identity());
    for (int trial = 0; trial < 50; ++trial) {
        const Isotopism t(random_perm(7, rng), random_perm(7, rng), random_perm(7, rng));
        const LatinSquare scrambled = apply_isotopism(t, sq);
        const Reduction red = reduce(scrambled);
        CHECK(is_reduced(red.square));
        CHECK(apply_isotopism(red.iso, scrambled) == red.square);
        CHECK(red.iso.gamma.is_identity());  // two-phase reduction never renames symbols
    }
}

TEST_CASE("is_reduced checks the first row and the first column") {
    CHECK(is_reduced(fixtures::order6_type33()));
    CHECK_FALSE(is_reduced(parse_square("2 1 1 2")));
    CHECK_FALSE(is_reduced(parse_square("1 2 3 3 1 2 2 3 1")));
}
