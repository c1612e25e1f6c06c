#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "latin/autotopy.hpp"
#include "latin/census.hpp"
#include "latin/fixtures.hpp"
#include "latin/parity.hpp"

namespace latin::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One published census row: merged class (k,m)(+(m,k) when k != m) with the
/// printed observed and expected counts.
struct PublishedRow {
    int k, m;
    long long observed, expected;
};

struct PublishedTable {
    int n;
    long long total;     // census size the expected column was computed for
    RoundMode mode;      // quantization that reproduces the printed column
    std::vector<PublishedRow> rows;
};

/// Exact census of RLS(7).
inline const PublishedTable& table1() {
    static const PublishedTable t{7, 16942080LL, RoundMode::truncate,
                                  {{0, 0, 3270, 4136},
                                   {1, 0, 47040, 57904},
                                   {2, 0, 246960, 173720},
                                   {3, 0, 208740, 289536},
                                   {1, 1, 345450, 202676},
                                   {2, 1, 979020, 1216056},
                                   {3, 1, 2493120, 2026760},
                                   {2, 2, 1803690, 1824084},
                                   {3, 2, 5538960, 6080280},
                                   {3, 3, 5275830, 5066904}}};
    return t;
}

/// 100,000-sample censuses for orders 8..11.
inline const PublishedTable& table2() {
    static const PublishedTable t{8, 100000LL, RoundMode::half_up,
                                  {{0, 0, 11, 8},
                                   {0, 1, 94, 96},
                                   {0, 2, 344, 344},
                                   {0, 4, 421, 428},
                                   {0, 3, 705, 680},
                                   {1, 1, 394, 392},
                                   {1, 2, 2604, 2736},
                                   {1, 4, 3430, 3416},
                                   {1, 3, 5258, 5472},
                                   {2, 2, 5085, 4784},
                                   {2, 4, 12123, 11964},
                                   {4, 4, 7819, 7477},
                                   {2, 3, 19000, 19144},
                                   {3, 4, 23697, 23924},
                                   {3, 3, 17015, 19140}}};
    return t;
}

inline const PublishedTable& table3() {
    static const PublishedTable t{9, 100000LL, RoundMode::half_up,
                                  {{0, 0, 2, 0},
                                   {0, 1, 20, 24},
                                   {0, 2, 124, 112},
                                   {1, 1, 125, 124},
                                   {0, 3, 264, 256},
                                   {0, 4, 340, 384},
                                   {1, 2, 1031, 992},
                                   {1, 3, 2312, 2304},
                                   {1, 4, 3479, 3464},
                                   {2, 2, 1997, 1976},
                                   {2, 3, 9182, 9232},
                                   {2, 4, 13704, 13840},
                                   {3, 3, 10799, 10768},
                                   {3, 4, 32468, 32296},
                                   {4, 4, 24153, 24224}}};
    return t;
}

inline const PublishedTable& table4() {
    static const PublishedTable t{10, 100000LL, RoundMode::half_up,
                                  {{0, 0, 2, 0},     {0, 1, 8, 8},      {0, 2, 32, 32},
                                   {1, 1, 40, 40},   {0, 3, 86, 88},    {0, 5, 107, 96},
                                   {0, 4, 165, 160}, {1, 2, 335, 344},  {1, 3, 881, 912},
                                   {1, 5, 939, 960}, {2, 2, 769, 772},  {1, 4, 1652, 1600},
                                   {2, 3, 4060, 4120}, {2, 5, 4181, 4324}, {2, 4, 7326, 7208},
                                   {3, 3, 5400, 5492}, {3, 5, 11461, 11536}, {5, 5, 6083, 6056},
                                   {3, 4, 19208, 19224}, {4, 5, 20286, 20188}, {4, 4, 16979, 16824}}};
    return t;
}

inline const PublishedTable& table5() {
    static const PublishedTable t{11, 100000LL, RoundMode::half_up,
                                  {{0, 0, 0, 0},     {0, 1, 3, 0},      {0, 2, 13, 8},
                                   {0, 3, 40, 32},   {1, 1, 11, 12},    {0, 4, 59, 64},
                                   {0, 5, 90, 88},   {1, 2, 120, 112},  {1, 3, 331, 344},
                                   {2, 2, 293, 288}, {1, 4, 691, 696},  {1, 5, 985, 968},
                                   {2, 3, 1699, 1728}, {2, 4, 3312, 3464}, {2, 5, 4881, 4848},
                                   {3, 3, 2555, 2596}, {3, 4, 10209, 10385}, {3, 5, 14446, 14536},
                                   {4, 4, 10472, 10384}, {4, 5, 29244, 29080}, {5, 5, 20546, 20356}}};
    return t;
}

inline std::vector<const PublishedTable*> all_tables() {
    return {&table1(), &table2(), &table3(), &table4(), &table5()};
}

/// The Proposition-2.1 triple for a reduced square and a chosen (alpha, j).
inline Isotopism theta(const LatinSquare& sq, const Permutation& alpha, int j) {
    const Permutation pj = col_perm(sq, j);
    const Permutation sigma = row_perm(sq, inverse(alpha)(1));
    return Isotopism(alpha, compose(alpha, compose(pj, inverse(sigma))), compose(alpha, pj));
}

namespace detail_v {

inline std::string class_label(int k, int m) {
    std::string s = "(" + std::to_string(k) + "," + std::to_string(m) + ")";
    if (k != m) s += "+(" + std::to_string(m) + "," + std::to_string(k) + ")";
    return s;
}

inline long long merged_count(const ParityCensus& c, int k, int m) {
    return (k == m) ? c.at(k, m) : c.at(k, m) + c.at(m, k);
}

inline long long merged_expected(const PublishedTable& t, int k, int m) {
    const long long e = expected_printed(t.n, k, m, t.total, t.mode);
    return (k == m) ? e : 2 * e;
}

/// Deterministic reduced JM samples for the cross-check criteria.
inline std::vector<LatinSquare> reduced_samples(int n, int count, std::uint64_t seed) {
    std::vector<LatinSquare> out;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(latin::detail::splitmix64(seed + static_cast<std::uint64_t>(i)));
        out.push_back(reduce(jm_sample(n, jm_default_steps(n), rng)).square);
    }
    return out;
}

/// Keys of the distinct reduced images of the n*n! candidate triples.
inline std::unordered_set<std::string> isotopy_class_keys(const LatinSquare& reduced_sq) {
    std::unordered_set<std::string> keys;
    for_each_candidate_triple(reduced_sq, [&](const Isotopism& t) {
        keys.insert(grid_key(apply_isotopism(t, reduced_sq)));
    });
    return keys;
}

inline int parity_of_key(const std::string& key, int n) {
    std::vector<int> grid(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) grid[i] = static_cast<int>(key[i]);
    int p = 1;
    for (int r = 0; r < n; ++r) p *= latin::detail::seq_sign_masked(grid.data() + static_cast<std::size_t>(r) * n, 1, n);
    for (int c = 0; c < n; ++c) p *= latin::detail::seq_sign_masked(grid.data() + c, n, n);
    return p;
}

inline bool same_elements(const AutotopyGroup& a, const AutotopyGroup& b) {
    return a.elements == b.elements;  // both sorted canonically
}

}  // namespace detail_v

/// Criterion 1: exact RLS(7) census matches the published table, merged
/// classes and total.
inline CheckResult criterion_table1(int threads = 1) {
    CheckResult r{"table1 exact census (n=7)", true, ""};
    const ParityCensus c = exact_census(7, threads);
    std::ostringstream os;
    if (c.total != table1().total) {
        r.pass = false;
        os << "total " << c.total << " != " << table1().total << "; ";
    }
    for (const auto& row : table1().rows) {
        const long long got = detail_v::merged_count(c, row.k, row.m);
        if (got != row.observed) {
            r.pass = false;
            os << detail_v::class_label(row.k, row.m) << " " << got << " != " << row.observed << "; ";
        }
    }
    r.detail = r.pass ? "total 16942080, all 10 merged classes exact" : os.str();
    return r;
}

/// Criterion 2: class structure at n = 5 and n = 6.
inline CheckResult criterion_small_orders() {
    CheckResult r{"small-order class structure (n=5,6)", true, ""};
    std::ostringstream os;
    const ParityCensus c5 = exact_census(5);
    if (c5.total != 56) {
        r.pass = false;
        os << "n=5 total " << c5.total << " != 56; ";
    }
    for (int k = 0; k <= 2; ++k)
        for (int m = 0; m <= 2; ++m) {
            const bool expect_nonzero = (k == 0 && m == 0) || (k == 1 && m == 1);
            if ((c5.at(k, m) != 0) != expect_nonzero) {
                r.pass = false;
                os << "n=5 (" << k << "," << m << ") count " << c5.at(k, m) << "; ";
            }
        }
    const ParityCensus c6 = exact_census(6);
    if (c6.total != 9408) {
        r.pass = false;
        os << "n=6 total " << c6.total << " != 9408; ";
    }
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m) {
            const bool expect_empty = (k == 0 && m == 2) || (k == 2 && m == 0);
            if ((c6.at(k, m) == 0) != expect_empty) {
                r.pass = false;
                os << "n=6 (" << k << "," << m << ") count " << c6.at(k, m) << "; ";
            }
        }
    r.detail = r.pass ? "n=5: only (0,0),(1,1); n=6: total 9408, empty exactly (0,2),(2,0)" : os.str();
    return r;
}

/// Criterion 3: worked autotopy group orders from all three algorithms.
inline CheckResult criterion_worked_orders() {
    CheckResult r{"worked autotopy orders (216, 3, 72)", true, ""};
    std::ostringstream os;
    const std::vector<std::pair<LatinSquare, long long>> cases = {
        {fixtures::order6_type33(), 216},
        {fixtures::order7_cycle_example(), 3},
        {fixtures::order6_group_like(), 72},
    };
    for (const auto& [sq, want] : cases) {
        const AutotopyGroup brute = autotopy_bruteforce(sq);
        const AutotopyGroup cyc = autotopy_cycle(sq);
        const AutotopyGroup pru = autotopy_pruned(sq);
        verify_group(brute, sq);
        if (brute.order() != want || cyc.order() != want || pru.order() != want ||
            !detail_v::same_elements(brute, cyc) || !detail_v::same_elements(brute, pru)) {
            r.pass = false;
            os << "order-" << sq.order() << " square: got " << brute.order() << "/" << cyc.order() << "/"
               << pru.order() << ", want " << want << "; ";
        }
    }
    r.detail = r.pass ? "brute = cycle = pruned on all three squares" : os.str();
    return r;
}

/// Criterion 4: cycle-structure and pruning diagnostics on the order-7 square.
inline CheckResult criterion_diagnostics() {
    CheckResult r{"worked-example diagnostics", true, ""};
    std::ostringstream os;
    const LatinSquare sq = fixtures::order7_cycle_example();
    const std::vector<int> mrows = matching_rows(sq);
    if (mrows != std::vector<int>{1, 4, 5}) {
        r.pass = false;
        os << "matching rows != {1,4,5}; ";
    }
    long long union_size = 0;
    for (int k : mrows) union_size += static_cast<long long>(alpha_candidates(sq, k).size());
    if (union_size != 36) {
        r.pass = false;
        os << "|U I_k| = " << union_size << " != 36; ";
    }
    const AutotopyGroup cyc = autotopy_cycle(sq);
    if (cyc.diag.checks_performed != 252 || cyc.order() != 3) {
        r.pass = false;
        os << "cycle checks " << cyc.diag.checks_performed << " (want 252), order " << cyc.order()
           << " (want 3); ";
    }
    const auto survivors = pruned_survivors(sq, 4);
    const Permutation a2 = parse_cycles("(1,4)(2,3)", 7);
    const Permutation a4 = parse_cycles("(1,5,4)(2,6,3)", 7);
    for (int j = 1; j <= 7; ++j) {
        const auto& s = survivors[static_cast<std::size_t>(j - 1)];
        bool ok;
        if (j == 2)
            ok = s.size() == 1 && s[0] == a2;
        else if (j == 4)
            ok = s.size() == 1 && s[0] == a4;
        else
            ok = s.empty();
        if (!ok) {
            r.pass = false;
            os << "pruning at k=4, j=" << j << ": " << s.size() << " survivor(s); ";
        }
    }
    r.detail = r.pass ? "rows {1,4,5}, 36 candidates, 252 checks; k=4 survivors only at j=2,4" : os.str();
    return r;
}

/// Criterion 5: cycle and pruned algorithms agree with brute force elementwise.
inline CheckResult criterion_oracle_equivalence() {
    CheckResult r{"oracle equivalence (orders 5-8)", true, ""};
    std::ostringstream os;
    long long checked = 0;
    auto check = [&](const LatinSquare& sq) {
        const AutotopyGroup brute = autotopy_bruteforce(sq);
        if (!detail_v::same_elements(brute, autotopy_cycle(sq)) ||
            !detail_v::same_elements(brute, autotopy_pruned(sq))) {
            r.pass = false;
            os << "mismatch on an order-" << sq.order() << " square (#" << checked << "); ";
        }
        ++checked;
    };
    for (int n : {5, 6}) enumerate_reduced(n, check);
    for (int n : {7, 8})
        for (const auto& sq : detail_v::reduced_samples(n, 100, 0x0A11CE00u + static_cast<unsigned>(n)))
            check(sq);
    r.detail = (r.pass ? "agree on " : "failures among ") + std::to_string(checked) + " squares";
    return r;
}

/// Criterion 6: |distinct reduced images| = n*n!/|Aut(L)| (Eq. 1).
inline CheckResult criterion_eq1() {
    CheckResult r{"Eq. (1) image count (n=5 exhaustive, n=6 sampled)", true, ""};
    std::ostringstream os;
    long long checked = 0;
    auto check = [&](const LatinSquare& sq) {
        const int n = sq.order();
        const long long images = static_cast<long long>(detail_v::isotopy_class_keys(sq).size());
        const long long order = autotopy_bruteforce(sq).order();
        if (images * order != n * factorial(n)) {
            r.pass = false;
            os << "order-" << n << " square #" << checked << ": " << images << " images, group " << order
               << "; ";
        }
        ++checked;
    };
    enumerate_reduced(5, check);
    for (const auto& sq : detail_v::reduced_samples(6, 1000, 0xE90001u)) check(sq);
    r.detail = (r.pass ? "holds on " : "failures among ") + std::to_string(checked) + " squares";
    return r;
}

/// Criterion 7: Theorem 1 even-member counts and Lemma 2.2 parity predictions.
inline CheckResult criterion_theorem1() {
    CheckResult r{"Theorem 1 / Lemma 2.2 parity counts", true, ""};
    std::ostringstream os;
    // every isotopy class of RLS(5)
    std::unordered_set<std::string> seen;
    long long classes5 = 0;
    enumerate_reduced(5, [&](const LatinSquare& sq) {
        const std::string key = grid_key(sq);
        if (seen.count(key)) return;
        const auto keys = detail_v::isotopy_class_keys(sq);
        long long even = 0;
        for (const auto& k : keys) {
            seen.insert(k);
            if (detail_v::parity_of_key(k, 5) == 1) ++even;
        }
        ++classes5;
        if (even != theorem1_even_count(parity_type(sq), static_cast<long long>(keys.size()))) {
            r.pass = false;
            os << "n=5 class of size " << keys.size() << ": even count " << even << " != formula; ";
        }
    });
    // 50 sampled classes of RLS(7)
    for (const auto& sq : detail_v::reduced_samples(7, 50, 0x7E0701u)) {
        const auto keys = detail_v::isotopy_class_keys(sq);
        long long even = 0;
        for (const auto& k : keys)
            if (detail_v::parity_of_key(k, 7) == 1) ++even;
        if (even != theorem1_even_count(parity_type(sq), static_cast<long long>(keys.size()))) {
            r.pass = false;
            os << "n=7 sampled class: even count " << even << " != formula; ";
        }
    }
    // Lemma 2.2 on 10,000 random (L, alpha, j) at n = 7
    long long bad = 0;
    const auto squares = detail_v::reduced_samples(7, 100, 0x13B22u);
    std::mt19937_64 rng(0x13B220u);
    std::vector<int> alpha_line(7);
    for (const auto& sq : squares)
        for (int t = 0; t < 100; ++t) {
            std::iota(alpha_line.begin(), alpha_line.end(), 1);
            std::shuffle(alpha_line.begin(), alpha_line.end(), rng);
            const Permutation alpha = Permutation::from_one_line(alpha_line);
            const int j = static_cast<int>(rng() % 7) + 1;
            const LatinSquare image = apply_isotopism(theta(sq, alpha, j), sq);
            if (lemma22_predicted_parity(sq, alpha, j) != square_parity(image)) ++bad;
        }
    if (bad != 0) {
        r.pass = false;
        os << bad << " of 10000 Lemma 2.2 predictions wrong; ";
    }
    r.detail = r.pass ? std::to_string(classes5) + " classes at n=5, 50 classes at n=7, 10000 parity predictions"
                      : os.str();
    return r;
}

/// Criterion 8: both bounds dominate the true order; the worked examples hit
/// their published bound values.
inline CheckResult criterion_bounds() {
    CheckResult r{"upper bounds dominate |Aut(L)|", true, ""};
    std::ostringstream os;
    long long checked = 0;
    auto check = [&](const LatinSquare& sq) {
        const long long order = autotopy_cycle(sq).order();
        if (bound_parity(sq) < order || bound_cycle(sq) < order) {
            r.pass = false;
            os << "bound violated on an order-" << sq.order() << " square (#" << checked << "); ";
        }
        ++checked;
    };
    for (int n : {5, 6}) enumerate_reduced(n, check);
    for (int n : {7, 8})
        for (const auto& sq : detail_v::reduced_samples(n, 100, 0x0A11CE00u + static_cast<unsigned>(n)))
            check(sq);
    if (bound_parity(fixtures::order6_type33()) != 216) {
        r.pass = false;
        os << "parity bound of the (3,3) example != 216; ";
    }
    if (bound_cycle(fixtures::order6_group_like()) != 144) {
        r.pass = false;
        os << "cycle bound of the group-like example != 144; ";
    }
    r.detail = (r.pass ? "dominance on " + std::to_string(checked) + " squares; example bounds 216 and 144"
                       : os.str());
    return r;
}

/// Criterion 9: the binomial identities in exact arithmetic for odd n <= 21.
inline CheckResult criterion_identities() {
    CheckResult r{"binomial identities (odd n = 3..21)", true, ""};
    std::ostringstream os;
    for (const auto& c : identity_checks(21))
        if (!c.ok) {
            r.pass = false;
            os << "n=" << c.n << " fails; ";
        }
    r.detail = r.pass ? "all three identities hold for every odd n in 3..21" : os.str();
    return r;
}

/// Criterion 10: 100,000 reduced JM samples at n = 8 against the published
/// expected column, band [0.90, 1.10] on classes expected >= 2000.
inline CheckResult criterion_sampler(int threads = 1, long long samples = 100000) {
    CheckResult r{"sampler statistics (n=8, 100k samples)", true, ""};
    std::ostringstream os;
    const ParityCensus c = sample_census(8, samples, 0x5EED0008u, 0, threads);
    for (const auto& row : table2().rows) {
        if (row.expected < 2000) continue;
        const double scaled = static_cast<double>(row.expected) * static_cast<double>(samples) / 100000.0;
        const double ratio = static_cast<double>(detail_v::merged_count(c, row.k, row.m)) / scaled;
        if (ratio < 0.90 || ratio > 1.10) {
            r.pass = false;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%s ratio %.3f; ", detail_v::class_label(row.k, row.m).c_str(),
                          ratio);
            os << buf;
        }
    }
    r.detail = r.pass ? "all classes with expected >= 2000 within [0.90, 1.10]" : os.str();
    return r;
}

/// Criterion 11: the expected-value model reproduces every printed expected
/// count in the five published tables to within +-1.
inline CheckResult criterion_expected_values() {
    CheckResult r{"expected-value columns (tables 1-5, +-1)", true, ""};
    std::ostringstream os;
    for (const PublishedTable* t : all_tables())
        for (const auto& row : t->rows) {
            const long long model = detail_v::merged_expected(*t, row.k, row.m);
            if (std::llabs(model - row.expected) > 1) {
                r.pass = false;
                os << "n=" << t->n << " " << detail_v::class_label(row.k, row.m) << ": model " << model
                   << " vs printed " << row.expected << "; ";
            }
        }
    r.detail = r.pass ? "all 82 printed expected values reproduced within +-1" : os.str();
    return r;
}

inline std::vector<CheckResult> run_all(int threads = 1) {
    return {criterion_table1(threads),
            criterion_small_orders(),
            criterion_worked_orders(),
            criterion_diagnostics(),
            criterion_oracle_equivalence(),
            criterion_eq1(),
            criterion_theorem1(),
            criterion_bounds(),
            criterion_identities(),
            criterion_sampler(threads),
            criterion_expected_values()};
}

}  // namespace latin::verify
