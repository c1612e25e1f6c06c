#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "latin/parity.hpp"
#include "latin/square.hpp"

namespace latin {

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

namespace detail {

/// Row and column permutations of a reduced square in raw one-line form
/// (rows[i][x-1] = sigma_{i+1}(x)), for the candidate-enumeration loops.
struct ReducedView {
    int n;
    const int* grid;
    std::vector<std::vector<int>> rows, row_inv, cols;

    explicit ReducedView(const LatinSquare& sq) : n(sq.order()), grid(sq.grid().data()) {
        if (!is_reduced(sq)) throw validation_error("expected a reduced square");
        rows.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        row_inv = rows;
        cols = rows;
        for (int i = 1; i <= n; ++i)
            for (int c = 1; c <= n; ++c) {
                int s = grid[static_cast<std::size_t>(i - 1) * n + (c - 1)];
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(s - 1)] = c;
                row_inv[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c - 1)] = s;
                cols[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(s - 1)] = i;
            }
    }

    bool fixes(const int* a, const int* b, const int* g) const {
        for (int r = 1; r <= n; ++r) {
            const int* row = grid + static_cast<std::size_t>(r - 1) * n;
            const int* out = grid + static_cast<std::size_t>(a[r - 1] - 1) * n;
            for (int c = 1; c <= n; ++c)
                if (out[b[c - 1] - 1] != g[row[c - 1] - 1]) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Stream the n*n! triples (alpha, alpha pi_j sigma_{alpha^-1(1)}^-1, alpha pi_j)
/// that map the reduced square to a reduced square, alpha in lexicographic
/// order and j ascending within each alpha.
inline void for_each_candidate_triple(const LatinSquare& sq,
                                      const std::function<void(const Isotopism&)>& fn) {
    detail::ReducedView v(sq);
    const int n = v.n;
    std::vector<int> alpha(static_cast<std::size_t>(n));
    std::iota(alpha.begin(), alpha.end(), 1);
    std::vector<int> gamma(alpha), beta(alpha);
    do {
        int k = 0;  // alpha^-1(1)
        while (alpha[static_cast<std::size_t>(k)] != 1) ++k;
        const auto& sinv = v.row_inv[static_cast<std::size_t>(k)];
        Permutation a = Permutation::from_one_line(alpha);
        for (int j = 0; j < n; ++j) {
            const auto& pj = v.cols[static_cast<std::size_t>(j)];
            for (int x = 0; x < n; ++x) gamma[static_cast<std::size_t>(x)] = alpha[static_cast<std::size_t>(pj[static_cast<std::size_t>(x)] - 1)];
            for (int x = 0; x < n; ++x) beta[static_cast<std::size_t>(x)] = gamma[static_cast<std::size_t>(sinv[static_cast<std::size_t>(x)] - 1)];
            fn(Isotopism(a, Permutation::from_one_line(beta), Permutation::from_one_line(gamma)));
        }
    } while (std::next_permutation(alpha.begin(), alpha.end()));
}

struct Diagnostics {
    long long candidates_considered = 0;
    long long checks_performed = 0;
};

/// The autotopisms of a square, with provenance and search diagnostics.
struct AutotopyGroup {
    int n = 0;
    std::vector<Isotopism> elements;  // sorted canonically
    std::string source;               // "brute", "cycle" or "pruned"
    Diagnostics diag;

    long long order() const { return static_cast<long long>(elements.size()); }

    bool contains(const Isotopism& t) const {
        return std::binary_search(elements.begin(), elements.end(), t);
    }
};

namespace detail {

inline void sort_elements(std::vector<Isotopism>& elems) { std::sort(elems.begin(), elems.end()); }

/// Transport a group computed on red.square back to the original square:
/// Gamma fixes L iff iso Gamma iso^-1 fixes iso(L).
inline AutotopyGroup conjugate_back(AutotopyGroup g, const Reduction& red) {
    if (red.iso.is_identity()) return g;
    const Isotopism inv = inverse(red.iso);
    for (auto& t : g.elements) t = compose(inv, compose(t, red.iso));
    sort_elements(g.elements);
    return g;
}

inline AutotopyGroup bruteforce_reduced(const LatinSquare& sq) {
    ReducedView v(sq);
    const int n = v.n;
    AutotopyGroup g;
    g.n = n;
    g.source = "brute";
    std::vector<int> alpha(static_cast<std::size_t>(n));
    std::iota(alpha.begin(), alpha.end(), 1);
    std::vector<int> gamma(alpha), beta(alpha);
    do {
        int k = 0;
        while (alpha[static_cast<std::size_t>(k)] != 1) ++k;
        const auto& sinv = v.row_inv[static_cast<std::size_t>(k)];
        for (int j = 0; j < n; ++j) {
            const auto& pj = v.cols[static_cast<std::size_t>(j)];
            for (int x = 0; x < n; ++x) gamma[static_cast<std::size_t>(x)] = alpha[static_cast<std::size_t>(pj[static_cast<std::size_t>(x)] - 1)];
            for (int x = 0; x < n; ++x) beta[static_cast<std::size_t>(x)] = gamma[static_cast<std::size_t>(sinv[static_cast<std::size_t>(x)] - 1)];
            ++g.diag.checks_performed;
            if (v.fixes(alpha.data(), beta.data(), gamma.data()))
                g.elements.emplace_back(Permutation::from_one_line(alpha), Permutation::from_one_line(beta),
                                        Permutation::from_one_line(gamma));
        }
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    g.diag.candidates_considered = g.diag.checks_performed;
    sort_elements(g.elements);
    return g;
}

}  // namespace detail

/// Exact autotopy group by filtering all n*n! candidate triples. Oracle for
/// the cycle-structure algorithms; rejects orders above 9.
inline AutotopyGroup autotopy_bruteforce(const LatinSquare& sq) {
    if (sq.order() > 9) throw validation_error("autotopy_bruteforce is limited to order <= 9");
    Reduction red = reduce(sq);
    return detail::conjugate_back(detail::bruteforce_reduced(red.square), red);
}

/// Rows of a reduced square grouped by cycle type. Types are listed in their
/// canonical (ascending lexicographic) order; multiplicities form the
/// associated partition of n.
struct CandidateProfile {
    std::vector<CycleType> types;
    std::vector<int> multiplicities;
    std::vector<std::vector<int>> row_sets;  // sorted row indices per type

    friend bool operator==(const CandidateProfile&, const CandidateProfile&) = default;

    bool matches(const CandidateProfile& other) const {
        return types == other.types && multiplicities == other.multiplicities;
    }
};

namespace detail {

inline CandidateProfile profile_of(const std::vector<Permutation>& perms) {
    std::vector<std::pair<CycleType, int>> typed;
    for (std::size_t i = 0; i < perms.size(); ++i)
        typed.emplace_back(cycle_type(perms[i]), static_cast<int>(i) + 1);
    std::sort(typed.begin(), typed.end());
    CandidateProfile p;
    for (auto& [t, row] : typed) {
        if (p.types.empty() || p.types.back() != t) {
            p.types.push_back(t);
            p.multiplicities.push_back(0);
            p.row_sets.emplace_back();
        }
        ++p.multiplicities.back();
        p.row_sets.back().push_back(row);
    }
    return p;
}

}  // namespace detail

inline CandidateProfile build_profile(const LatinSquare& sq) {
    if (!is_reduced(sq)) throw validation_error("build_profile expects a reduced square");
    std::vector<Permutation> rows;
    for (int i = 1; i <= sq.order(); ++i) rows.push_back(row_perm(sq, i));
    return detail::profile_of(rows);
}

/// Profile of { sigma_k^-1 sigma_i : i = 1..n }; row i is listed under the
/// type of sigma_k^-1 sigma_i.
inline CandidateProfile shifted_profile(const LatinSquare& sq, int k) {
    if (!is_reduced(sq)) throw validation_error("shifted_profile expects a reduced square");
    if (k < 1 || k > sq.order()) throw validation_error("row index out of range");
    const Permutation skinv = inverse(row_perm(sq, k));
    std::vector<Permutation> perms;
    for (int i = 1; i <= sq.order(); ++i) perms.push_back(compose(skinv, row_perm(sq, i)));
    return detail::profile_of(perms);
}

/// Rows k whose shifted profile has the same types and multiplicities as the
/// base profile. Always contains 1.
inline std::vector<int> matching_rows(const LatinSquare& sq) {
    const CandidateProfile base = build_profile(sq);
    std::vector<int> out;
    for (int k = 1; k <= sq.order(); ++k)
        if (shifted_profile(sq, k).matches(base)) out.push_back(k);
    return out;
}

/// All alpha mapping, for each cycle type, the shifted row set of that type
/// bijectively onto the base row set of that type. There are prod(lambda_i!)
/// of them and each satisfies alpha(k) = 1.
inline void for_each_alpha_candidate(const LatinSquare& sq, int k,
                                     const std::function<void(const Permutation&)>& fn) {
    const CandidateProfile base = build_profile(sq);
    const CandidateProfile shifted = shifted_profile(sq, k);
    if (!shifted.matches(base)) throw validation_error("row " + std::to_string(k) + " does not match");
    const int n = sq.order();
    const std::size_t classes = base.types.size();
    std::vector<std::vector<int>> assign;  // per class, current permutation of the base set
    for (std::size_t t = 0; t < classes; ++t) assign.push_back(base.row_sets[t]);
    std::vector<int> alpha(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t t = 0; t < classes; ++t)
            for (std::size_t i = 0; i < assign[t].size(); ++i)
                alpha[static_cast<std::size_t>(shifted.row_sets[t][i] - 1)] = assign[t][i];
        fn(Permutation::from_one_line(alpha));
        // odometer over the per-class bijections, last class fastest
        std::size_t t = classes;
        while (t > 0) {
            --t;
            if (std::next_permutation(assign[t].begin(), assign[t].end())) break;
            if (t == 0) return;
        }
    }
}

inline std::vector<Permutation> alpha_candidates(const LatinSquare& sq, int k) {
    std::vector<Permutation> out;
    for_each_alpha_candidate(sq, k, [&](const Permutation& a) { out.push_back(a); });
    return out;
}

namespace detail {

inline void test_alpha_all_columns(const ReducedView& v, const Permutation& a, AutotopyGroup& g) {
    const int n = v.n;
    const std::vector<int>& alpha = a.one_line();
    int k = 0;
    while (alpha[static_cast<std::size_t>(k)] != 1) ++k;
    const auto& sinv = v.row_inv[static_cast<std::size_t>(k)];
    std::vector<int> gamma(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& pj = v.cols[static_cast<std::size_t>(j)];
        for (int x = 0; x < n; ++x) gamma[static_cast<std::size_t>(x)] = alpha[static_cast<std::size_t>(pj[static_cast<std::size_t>(x)] - 1)];
        for (int x = 0; x < n; ++x) beta[static_cast<std::size_t>(x)] = gamma[static_cast<std::size_t>(sinv[static_cast<std::size_t>(x)] - 1)];
        ++g.diag.checks_performed;
        if (v.fixes(alpha.data(), beta.data(), gamma.data()))
            g.elements.emplace_back(a, Permutation::from_one_line(beta), Permutation::from_one_line(gamma));
    }
}

}  // namespace detail

/// Cycle-structure algorithm: restrict the first components to the union of
/// the candidate sets I_k over matching rows k, then test each (alpha, j).
inline AutotopyGroup autotopy_cycle(const LatinSquare& sq) {
    Reduction red = reduce(sq);
    detail::ReducedView v(red.square);
    AutotopyGroup g;
    g.n = sq.order();
    g.source = "cycle";
    for (int k : matching_rows(red.square)) {
        for_each_alpha_candidate(red.square, k, [&](const Permutation& a) {
            ++g.diag.candidates_considered;
            detail::test_alpha_all_columns(v, a, g);
        });
    }
    detail::sort_elements(g.elements);
    return detail::conjugate_back(std::move(g), red);
}

namespace detail {

/// Alignment enumeration: all alpha with sigma = alpha rho alpha^-1, i.e. all
/// ways to map the cycles of rho onto same-length cycles of sigma with a
/// rotation each. For c cycles of a common length l there are c! * l^c choices.
inline void for_each_cycle_alignment(const Permutation& rho, const Permutation& sigma,
                                     const std::function<void(const Permutation&)>& fn) {
    const int n = rho.degree();
    auto rc = cycle_decomposition(rho);
    auto sc = cycle_decomposition(sigma);
    LATIN_ASSERT(cycle_type(rho) == cycle_type(sigma), "alignment requires equal cycle types");
    // group indices by length; the canonical decomposition is sorted by length
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [first, last) ranges of equal length
    for (std::size_t i = 0; i < rc.size();) {
        std::size_t j = i;
        while (j < rc.size() && rc[j].size() == rc[i].size()) ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    std::vector<std::vector<std::size_t>> target(groups.size());  // per group, sigma-cycle order
    std::vector<std::vector<int>> offset(groups.size());          // per group, rotation per rho-cycle
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (std::size_t i = groups[gi].first; i < groups[gi].second; ++i) target[gi].push_back(i);
        offset[gi].assign(groups[gi].second - groups[gi].first, 0);
    }
    std::vector<int> alpha(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t gi = 0; gi < groups.size(); ++gi)
            for (std::size_t i = groups[gi].first; i < groups[gi].second; ++i) {
                const auto& from = rc[i];
                const auto& to = sc[target[gi][i - groups[gi].first]];
                const int off = offset[gi][i - groups[gi].first];
                const int len = static_cast<int>(from.size());
                for (int p = 0; p < len; ++p)
                    alpha[static_cast<std::size_t>(from[static_cast<std::size_t>(p)] - 1)] =
                        to[static_cast<std::size_t>((p + off) % len)];
            }
        fn(Permutation::from_one_line(alpha));
        // advance: rotations first, then the cycle-to-cycle bijections
        bool carried = true;
        for (std::size_t gi = groups.size(); carried && gi-- > 0;) {
            auto& offs = offset[gi];
            const int len = static_cast<int>(rc[groups[gi].first].size());
            for (std::size_t i = offs.size(); carried && i-- > 0;) {
                if (++offs[i] < len) {
                    carried = false;
                } else {
                    offs[i] = 0;
                }
            }
            if (carried && std::next_permutation(target[gi].begin(), target[gi].end())) carried = false;
        }
        if (carried) return;
    }
}

struct PrunedPlan {
    int anchor_base_row = 0;     // row i whose cycle type occurs once
    int anchor_shifted_row = 0;  // forced preimage i' under any valid alpha
    std::vector<int> class_of_base;     // type index per row in the base profile
    std::vector<int> class_of_shifted;  // type index per row in the shifted profile
};

/// Anchor selection for the pruned search: the multiplicity-1 type (other
/// than the identity type) with the longest cycle, minimizing alignment
/// fan-out. Empty when every usable type repeats.
inline std::optional<PrunedPlan> pruned_plan(const CandidateProfile& base, const CandidateProfile& shifted,
                                             int n) {
    std::optional<std::size_t> best;
    for (std::size_t t = 0; t < base.types.size(); ++t) {
        if (base.multiplicities[t] != 1) continue;
        if (base.types[t].parts == std::vector<int>(static_cast<std::size_t>(n), 1)) continue;
        if (!best || base.types[t].max_part() > base.types[*best].max_part() ||
            (base.types[t].max_part() == base.types[*best].max_part() && base.types[t] > base.types[*best]))
            best = t;
    }
    if (!best) return std::nullopt;
    PrunedPlan plan;
    plan.anchor_base_row = base.row_sets[*best][0];
    plan.anchor_shifted_row = shifted.row_sets[*best][0];
    plan.class_of_base.assign(static_cast<std::size_t>(n) + 1, -1);
    plan.class_of_shifted.assign(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t t = 0; t < base.types.size(); ++t) {
        for (int r : base.row_sets[t]) plan.class_of_base[static_cast<std::size_t>(r)] = static_cast<int>(t);
        for (int r : shifted.row_sets[t]) plan.class_of_shifted[static_cast<std::size_t>(r)] = static_cast<int>(t);
    }
    return plan;
}

}  // namespace detail

/// Survivors of the conjugacy pruning for matching row k: for each column j
/// (1-based index into the result), the alphas consistent with both the
/// cycle alignment of sigma_i = alpha rho_j alpha^-1 and the per-type class
/// constraints. Diagnostics of Example-6.2 style runs.
inline std::vector<std::vector<Permutation>> pruned_survivors(const LatinSquare& sq, int k,
                                                              Diagnostics* diag = nullptr) {
    if (!is_reduced(sq)) throw validation_error("pruned_survivors expects a reduced square");
    const int n = sq.order();
    const CandidateProfile base = build_profile(sq);
    const CandidateProfile shifted = shifted_profile(sq, k);
    if (!shifted.matches(base)) throw validation_error("row " + std::to_string(k) + " does not match");
    auto plan = detail::pruned_plan(base, shifted, n);
    if (!plan) throw validation_error("no multiplicity-1 cycle type to anchor the pruned search");
    const Permutation sigma_i = row_perm(sq, plan->anchor_base_row);
    const Permutation tau = compose(inverse(row_perm(sq, k)), row_perm(sq, plan->anchor_shifted_row));
    std::vector<std::vector<Permutation>> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const Permutation rho = conjugate(tau, col_perm(sq, j));
        detail::for_each_cycle_alignment(rho, sigma_i, [&](const Permutation& a) {
            if (diag) ++diag->candidates_considered;
            for (int x = 1; x <= n; ++x)
                if (plan->class_of_shifted[static_cast<std::size_t>(x)] !=
                    plan->class_of_base[static_cast<std::size_t>(a(x))])
                    return;
            out[static_cast<std::size_t>(j - 1)].push_back(a);
        });
    }
    return out;
}

/// Conjugacy-pruned refinement: per matching row k, derive the alphas forced
/// by aligning an unrepeated cycle type across each column conjugation, then
/// test only those (alpha, j) pairs. Falls back to the plain cycle search for
/// a row when no unrepeated type exists.
inline AutotopyGroup autotopy_pruned(const LatinSquare& sq) {
    Reduction red = reduce(sq);
    detail::ReducedView v(red.square);
    const int n = v.n;
    AutotopyGroup g;
    g.n = sq.order();
    g.source = "pruned";
    const CandidateProfile base = build_profile(red.square);
    std::vector<int> gamma(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    for (int k : matching_rows(red.square)) {
        const CandidateProfile shifted = shifted_profile(red.square, k);
        if (!detail::pruned_plan(base, shifted, n)) {
            for_each_alpha_candidate(red.square, k, [&](const Permutation& a) {
                ++g.diag.candidates_considered;
                detail::test_alpha_all_columns(v, a, g);
            });
            continue;
        }
        auto per_column = pruned_survivors(red.square, k, &g.diag);
        const auto& sinv = v.row_inv[static_cast<std::size_t>(k - 1)];
        for (int j = 0; j < n; ++j) {
            const auto& pj = v.cols[static_cast<std::size_t>(j)];
            for (const Permutation& a : per_column[static_cast<std::size_t>(j)]) {
                const std::vector<int>& alpha = a.one_line();
                for (int x = 0; x < n; ++x) gamma[static_cast<std::size_t>(x)] = alpha[static_cast<std::size_t>(pj[static_cast<std::size_t>(x)] - 1)];
                for (int x = 0; x < n; ++x) beta[static_cast<std::size_t>(x)] = gamma[static_cast<std::size_t>(sinv[static_cast<std::size_t>(x)] - 1)];
                ++g.diag.checks_performed;
                if (v.fixes(alpha.data(), beta.data(), gamma.data()))
                    g.elements.emplace_back(a, Permutation::from_one_line(beta),
                                            Permutation::from_one_line(gamma));
            }
        }
    }
    detail::sort_elements(g.elements);
    return detail::conjugate_back(std::move(g), red);
}

/// True iff there are pairwise-distinct columns j, r, l with pi_l = pi_j pi_r.
inline bool has_column_product(const LatinSquare& sq) {
    const int n = sq.order();
    std::vector<Permutation> cols;
    for (int j = 1; j <= n; ++j) cols.push_back(col_perm(sq, j));
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) {
            if (r == j) continue;
            const Permutation prod = compose(cols[static_cast<std::size_t>(j)], cols[static_cast<std::size_t>(r)]);
            for (int l = 0; l < n; ++l)
                if (l != j && l != r && cols[static_cast<std::size_t>(l)] == prod) return true;
        }
    return false;
}

inline bool has_row_product(const LatinSquare& sq) {
    const int n = sq.order();
    std::vector<Permutation> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(row_perm(sq, i));
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) {
            if (r == j) continue;
            const Permutation prod = compose(rows[static_cast<std::size_t>(j)], rows[static_cast<std::size_t>(r)]);
            for (int l = 0; l < n; ++l)
                if (l != j && l != r && rows[static_cast<std::size_t>(l)] == prod) return true;
        }
    return false;
}

/// Parity-type upper bound on the autotopy group order: n*n!/max(C(n,k),C(n,m)),
/// tightened to n!/C(n,k) (resp. n!/C(n,m)) when the reduced form has no
/// column (resp. row) that is the product of two other columns (rows).
inline long long bound_parity(const LatinSquare& sq) {
    const int n = sq.order();
    const ParityType pt = parity_type(sq);
    const LatinSquare red = reduce(sq).square;
    long long best = n * factorial(n) / std::max(binomial(n, pt.k), binomial(n, pt.m));
    if (!has_column_product(red)) best = std::min(best, factorial(n) / binomial(n, pt.k));
    if (!has_row_product(red)) best = std::min(best, factorial(n) / binomial(n, pt.m));
    return best;
}

/// Cycle-structure upper bound n^2 * prod(lambda_i!), tightened by a factor
/// of n when the reduced form has no column product.
inline long long bound_cycle(const LatinSquare& sq) {
    const int n = sq.order();
    const LatinSquare red = reduce(sq).square;
    long long prod = 1;
    for (int lambda : build_profile(red).multiplicities) prod *= factorial(lambda);
    long long best = static_cast<long long>(n) * n * prod;
    if (!has_column_product(red)) best = std::min(best, static_cast<long long>(n) * prod);
    return best;
}

/// Explicit isotopy test against the Cayley table of Z_n, by membership of
/// the reduced form in the set of reduced squares isotopic to the table.
/// Intended for small prime orders; rejects n > 7.
inline bool isotopic_to_cyclic(const LatinSquare& sq) {
    const int n = sq.order();
    if (n > 7) throw validation_error("isotopic_to_cyclic is limited to order <= 7");
    const LatinSquare target = reduce(sq).square;
    const LatinSquare table = cyclic_table(n);
    bool found = false;
    for_each_candidate_triple(table, [&](const Isotopism& t) {
        if (!found && apply_isotopism(t, table) == target) found = true;
    });
    return found;
}

/// Every element fixes the square; identity present; closed under inverse and
/// (for groups of order <= closure_cap) under composition.
inline void verify_group(const AutotopyGroup& g, const LatinSquare& sq, std::size_t closure_cap = 1000) {
    LATIN_ASSERT(g.contains(Isotopism::identity(sq.order())), "group is missing the identity");
    for (const auto& t : g.elements) {
        LATIN_ASSERT(apply_isotopism(t, sq) == sq, "group element does not fix the square");
        LATIN_ASSERT(g.contains(inverse(t)), "group is not closed under inverse");
    }
    if (g.elements.size() <= closure_cap)
        for (const auto& s : g.elements)
            for (const auto& t : g.elements)
                LATIN_ASSERT(g.contains(compose(s, t)), "group is not closed under composition");
}

}  // namespace latin
