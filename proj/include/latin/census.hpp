#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "latin/autotopy.hpp"
#include "latin/parity.hpp"
#include "latin/square.hpp"

namespace latin {

namespace detail {

/// Allocation-free sign of a sequence read with a stride (row: stride 1,
/// column: stride n). Degrees up to 32.
inline int seq_sign_masked(const int* seq, int stride, int n) {
    std::uint32_t seen = 0;
    int cycles = 0;
    for (int start = 0; start < n; ++start) {
        if (seen & (1u << start)) continue;
        ++cycles;
        int x = start;
        while (!(seen & (1u << x))) {
            seen |= 1u << x;
            x = seq[x * stride] - 1;
        }
    }
    return ((n - cycles) & 1) ? -1 : 1;
}

inline void raw_parity_type(const int* grid, int n, int& k, int& m) {
    int odd_rows = 0, odd_cols = 0;
    for (int r = 0; r < n; ++r)
        if (seq_sign_masked(grid + static_cast<std::size_t>(r) * n, 1, n) < 0) ++odd_rows;
    for (int c = 0; c < n; ++c)
        if (seq_sign_masked(grid + c, n, n) < 0) ++odd_cols;
    k = std::min(odd_rows, n - odd_rows);
    m = std::min(odd_cols, n - odd_cols);
}

/// Reduced squares of order n in lexicographic order of the concatenated
/// rows. Row 1 and column 1 are pinned; remaining cells are filled row by
/// row against per-column occupancy masks. If row2 is non-null, only squares
/// with that second row are produced (the unit of work partitioning).
template <class F>
void enumerate_reduced_raw(int n, F&& emit, const std::vector<int>* row2 = nullptr) {
    if (n < 1 || n > 7)
        throw validation_error("exact enumeration supports orders 1..7 (order " + std::to_string(n) +
                               " requested)");
    const int full = (1 << n) - 1;
    std::vector<int> grid(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<int> colmask(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        grid[static_cast<std::size_t>(c)] = c + 1;
        colmask[static_cast<std::size_t>(c)] = 1 << c;
    }
    for (int r = 0; r < n; ++r) grid[static_cast<std::size_t>(r) * n] = r + 1;
    int start_row = 1;
    if (row2 && n >= 2) {
        if (static_cast<int>(row2->size()) != n) throw validation_error("row2 has the wrong length");
        for (int c = 0; c < n; ++c) {
            grid[static_cast<std::size_t>(n) + c] = (*row2)[static_cast<std::size_t>(c)];
            if (c > 0) colmask[static_cast<std::size_t>(c)] |= 1 << ((*row2)[static_cast<std::size_t>(c)] - 1);
        }
        start_row = 2;
    }
    // fill(r, c, rowmask): cells (r, c..n-1), then subsequent rows
    auto fill = [&](auto&& self, int r, int c, int rowmask) -> void {
        if (c == n) {
            if (r == n - 1) {
                emit(static_cast<const int*>(grid.data()));
                return;
            }
            self(self, r + 1, 1, 1 << (r + 1));
            return;
        }
        int avail = full & ~(rowmask | colmask[static_cast<std::size_t>(c)]);
        while (avail) {
            const int bit = avail & -avail;
            avail ^= bit;
            grid[static_cast<std::size_t>(r) * n + c] = std::countr_zero(static_cast<unsigned>(bit)) + 1;
            colmask[static_cast<std::size_t>(c)] ^= bit;
            self(self, r, c + 1, rowmask | bit);
            colmask[static_cast<std::size_t>(c)] ^= bit;
        }
    };
    if (n == 1) {
        emit(static_cast<const int*>(grid.data()));
        return;
    }
    fill(fill, start_row, 1, 1 << start_row);
}

/// Valid second rows of a reduced square of order n, in lexicographic order.
inline std::vector<std::vector<int>> row2_candidates(int n) {
    std::vector<std::vector<int>> out;
    if (n < 2) return out;
    std::vector<int> row(static_cast<std::size_t>(n));
    row[0] = 2;
    auto fill = [&](auto&& self, int c, int used) -> void {
        if (c == n) {
            out.push_back(row);
            return;
        }
        for (int s = 1; s <= n; ++s) {
            const int bit = 1 << (s - 1);
            if ((used & bit) || s == c + 1) continue;  // column clash with row 1
            row[static_cast<std::size_t>(c)] = s;
            self(self, c + 1, used | bit);
        }
    };
    fill(fill, 1, 1 << 1);
    return out;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Every reduced square of order n exactly once, deterministic order.
inline void enumerate_reduced(int n, const std::function<void(const LatinSquare&)>& fn) {
    detail::enumerate_reduced_raw(n, [&](const int* grid) {
        fn(SquareBuilder::unchecked(n, std::vector<int>(grid, grid + static_cast<std::size_t>(n) * n)));
    });
}

/// Map from parity type (k, m) to a count, with provenance.
struct ParityCensus {
    enum class Mode { exact, sampled };

    int n = 0;
    long long total = 0;
    std::vector<std::vector<long long>> counts;  // [k][m], 0 <= k, m <= n/2
    Mode mode = Mode::exact;
    std::uint64_t seed = 0;
    long long steps = 0;

    long long at(int k, int m) const { return counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]; }
};

/// Accumulates a census from same-order squares.
class CensusBuilder {
public:
    explicit CensusBuilder(int n) : n_(n) {
        census_.n = n;
        census_.counts.assign(static_cast<std::size_t>(n / 2) + 1,
                              std::vector<long long>(static_cast<std::size_t>(n / 2) + 1, 0));
    }

    void add(const LatinSquare& sq) {
        if (sq.order() != n_)
            throw validation_error("census mixes orders " + std::to_string(n_) + " and " +
                                   std::to_string(sq.order()));
        add_raw(sq.grid().data());
    }

    void add_raw(const int* grid) {
        int k, m;
        detail::raw_parity_type(grid, n_, k, m);
        ++census_.counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
        ++census_.total;
    }

    void merge(const CensusBuilder& other) {
        for (std::size_t k = 0; k < census_.counts.size(); ++k)
            for (std::size_t m = 0; m < census_.counts.size(); ++m)
                census_.counts[k][m] += other.census_.counts[k][m];
        census_.total += other.census_.total;
    }

    ParityCensus finish(ParityCensus::Mode mode, std::uint64_t seed = 0, long long steps = 0) {
        census_.mode = mode;
        census_.seed = seed;
        census_.steps = steps;
        return census_;
    }

private:
    int n_;
    ParityCensus census_;
};

/// Exact parity census of all reduced squares of order n. Work is split by
/// the second row; tallies merge by summation, so the result does not depend
/// on the thread count.
inline ParityCensus exact_census(int n, int threads = 1) {
    if (n == 1 || threads <= 1) {
        CensusBuilder b(n);
        detail::enumerate_reduced_raw(n, [&](const int* grid) { b.add_raw(grid); });
        return b.finish(ParityCensus::Mode::exact);
    }
    const auto seconds = detail::row2_candidates(n);
    std::vector<CensusBuilder> parts(static_cast<std::size_t>(threads), CensusBuilder(n));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < seconds.size(); i += static_cast<std::size_t>(threads))
                detail::enumerate_reduced_raw(
                    n, [&](const int* grid) { parts[static_cast<std::size_t>(t)].add_raw(grid); }, &seconds[i]);
        });
    for (auto& th : pool) th.join();
    CensusBuilder b(n);
    for (const auto& p : parts) b.merge(p);
    return b.finish(ParityCensus::Mode::exact);
}

/// Default Jacobson-Matthews mixing budget: proper-state moves per sample.
inline long long jm_default_steps(int n) { return 10LL * n * n * n; }

namespace detail {

/// One walk of the +-1 incidence-cube chain: `steps` moves from proper
/// states, then continue until the cube is proper again.
class JmCube {
public:
    JmCube(int n, std::mt19937_64& rng) : n_(n), rng_(rng) { reset(); }

    void walk(long long steps) {
        // a stuck walk is a bug magnet; cap and re-randomize as a guard
        const long long cap = 1000 * (steps + static_cast<long long>(n_) * n_ * n_ + 10);
        long long proper_moves = 0, total = 0;
        while (proper_moves < steps || improper_) {
            if (improper_)
                improper_move();
            else {
                proper_move();
                ++proper_moves;
            }
            if (++total > cap) {
                reset();
                proper_moves = 0;
                total = 0;
            }
        }
    }

    LatinSquare read() const {
        std::vector<int> grid(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                for (int s = 0; s < n_; ++s)
                    if (x(r, c, s) == 1) grid[static_cast<std::size_t>(r) * n_ + c] = s + 1;
        return LatinSquare::from_grid(n_, std::move(grid));
    }

private:
    void reset() {
        cube_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) x(r, c, (r + c) % n_) = 1;
        improper_ = false;
    }

    std::int8_t& x(int r, int c, int s) {
        return cube_[(static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)) * n_ +
                     static_cast<std::size_t>(s)];
    }
    std::int8_t x(int r, int c, int s) const {
        return cube_[(static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)) * n_ +
                     static_cast<std::size_t>(s)];
    }

    int uniform(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

    void move(int r, int c, int s, int r2, int c2, int s2) {
        ++x(r, c, s);
        ++x(r2, c2, s);
        ++x(r2, c, s2);
        ++x(r, c2, s2);
        --x(r2, c, s);
        --x(r, c2, s);
        --x(r, c, s2);
        --x(r2, c2, s2);
        improper_ = x(r2, c2, s2) < 0;
        if (improper_) {
            neg_r_ = r2;
            neg_c_ = c2;
            neg_s_ = s2;
        }
    }

    void proper_move() {
        int r, c, s;
        do {  // uniform over the zero cells
            r = uniform(n_);
            c = uniform(n_);
            s = uniform(n_);
        } while (x(r, c, s) != 0);
        int r2 = 0, c2 = 0, s2 = 0;
        for (int i = 0; i < n_; ++i)
            if (x(i, c, s) == 1) r2 = i;
        for (int i = 0; i < n_; ++i)
            if (x(r, i, s) == 1) c2 = i;
        for (int i = 0; i < n_; ++i)
            if (x(r, c, i) == 1) s2 = i;
        move(r, c, s, r2, c2, s2);
    }

    void improper_move() {
        const int r = neg_r_, c = neg_c_, s = neg_s_;
        int pick[2], found;
        auto choose = [&](auto get) {
            found = 0;
            for (int i = 0; i < n_; ++i)
                if (get(i) == 1) pick[found++] = i;
            LATIN_ASSERT(found == 2, "improper line must carry exactly two ones");
            return pick[uniform(2)];
        };
        const int r2 = choose([&](int i) { return x(i, c, s); });
        const int c2 = choose([&](int i) { return x(r, i, s); });
        const int s2 = choose([&](int i) { return x(r, c, i); });
        move(r, c, s, r2, c2, s2);
    }

    int n_;
    std::mt19937_64& rng_;
    std::vector<std::int8_t> cube_;
    bool improper_ = false;
    int neg_r_ = 0, neg_c_ = 0, neg_s_ = 0;
};

}  // namespace detail

/// One near-uniform random Latin square of order n via the Jacobson-Matthews
/// incidence-cube walk, started from the cyclic-group table.
inline LatinSquare jm_sample(int n, long long steps, std::mt19937_64& rng) {
    if (n < 2) throw validation_error("jm_sample requires order >= 2");
    detail::JmCube cube(n, rng);
    // randomize the step parity: at n = 2 every move is forced, so the chain
    // is periodic and a fixed even budget would always return the start state
    cube.walk(steps + static_cast<long long>(rng() & 1));
    return cube.read();
}

/// Parity census of `samples` random squares, each reduced before tallying.
/// Each sample runs a fresh walk with a seed derived from (seed, sample
/// index), so the tally is independent of the thread count.
inline ParityCensus sample_census(int n, long long samples, std::uint64_t seed, long long steps,
                                  int threads = 1) {
    if (steps <= 0) steps = jm_default_steps(n);
    threads = std::max(1, threads);
    std::vector<CensusBuilder> parts(static_cast<std::size_t>(threads), CensusBuilder(n));
    auto run = [&](int t) {
        for (long long i = t; i < samples; i += threads) {
            std::mt19937_64 rng(detail::splitmix64(seed + static_cast<std::uint64_t>(i)));
            const LatinSquare sq = jm_sample(n, steps, rng);
            parts[static_cast<std::size_t>(t)].add(reduce(sq).square);
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }
    CensusBuilder b(n);
    for (const auto& p : parts) b.merge(p);
    return b.finish(ParityCensus::Mode::sampled, seed, steps);
}

/// Conjectured expected size of the parity class (k, m) among `total` reduced
/// squares: C(n,k)C(n,m)/2^(2(n-1)) * total for odd n, and
/// r*s*C(n,k)C(n,m)/2^(2n) * total for even n with r = 1 iff k = n/2
/// (s likewise for m).
inline double expected_value(int n, int k, int m, long long total) {
    const double base = static_cast<double>(binomial(n, k)) * static_cast<double>(binomial(n, m)) *
                        static_cast<double>(total) / std::ldexp(1.0, 2 * n);
    const int r = (2 * k == n) ? 1 : 2;
    const int s = (2 * m == n) ? 1 : 2;
    return base * r * s;
}

enum class RoundMode { half_up, truncate };

/// Expected count quantized the way the source tables print it: the ratio
/// C(n,k)C(n,m)*total/2^(2n) is rounded (or truncated) to an integer first
/// and then scaled by r*s.
inline long long expected_printed(int n, int k, int m, long long total, RoundMode mode) {
    const double base = static_cast<double>(binomial(n, k)) * static_cast<double>(binomial(n, m)) *
                        static_cast<double>(total) / std::ldexp(1.0, 2 * n);
    const double q = (mode == RoundMode::half_up) ? std::floor(base + 0.5) : std::floor(base);
    const int r = (2 * k == n) ? 1 : 2;
    const int s = (2 * m == n) ? 1 : 2;
    return static_cast<long long>(q) * r * s;
}

/// RELS(n) - ROLS(n) from an exact census of odd order:
/// sum over k,m < n/2 of (-1)^(k+m) (n-2k)(n-2m) N(k,m), divided by n^2.
inline long long rels_minus_rols(const ParityCensus& census) {
    const long long n = census.n;
    if (n % 2 == 0) throw validation_error("rels_minus_rols requires odd order");
    if (census.mode != ParityCensus::Mode::exact)
        throw validation_error("rels_minus_rols requires an exact census");
    long long sum = 0;
    for (int k = 0; 2 * k < n; ++k)
        for (int m = 0; 2 * m < n; ++m) {
            const long long term = (n - 2 * k) * (n - 2 * m) * census.at(k, m);
            sum += ((k + m) % 2 == 0) ? term : -term;
        }
    if (sum % (n * n) != 0) throw validation_error("rels_minus_rols: class sum is not divisible by n^2");
    return sum / (n * n);
}

struct IdentityCheck {
    int n = 0;
    long long weighted_sum = 0;   // sum (-1)^k k C(n,k), k <= n/2
    long long weighted_rhs = 0;   // (-1)^((n-1)/2) n C(n-2, (n-1)/2)
    long long alternating_sum = 0;  // sum (-1)^k C(n,k), k <= n/2
    long long alternating_rhs = 0;  // 2 (-1)^((n-1)/2) C(n-2, (n-1)/2)
    long long double_sum = 0;       // sum (-1)^(k+m) (n-2k)(n-2m) C(n,k) C(n,m)
    bool ok = false;
};

/// Exact-integer verification of the two alternating binomial identities and
/// the vanishing of the double sum, for every odd n in 3..n_max.
inline std::vector<IdentityCheck> identity_checks(int n_max) {
    if (n_max < 3) throw validation_error("identity_checks requires n_max >= 3");
    std::vector<IdentityCheck> out;
    for (int n = 3; n <= n_max; n += 2) {
        IdentityCheck c;
        c.n = n;
        for (int k = 0; k <= n / 2; ++k) {
            const long long b = binomial(n, k);
            const long long sgn = (k % 2 == 0) ? 1 : -1;
            c.weighted_sum += sgn * k * b;
            c.alternating_sum += sgn * b;
        }
        const long long sgn_half = ((n - 1) / 2 % 2 == 0) ? 1 : -1;
        c.weighted_rhs = sgn_half * n * binomial(n - 2, (n - 1) / 2);
        c.alternating_rhs = 2 * sgn_half * binomial(n - 2, (n - 1) / 2);
        for (int k = 0; k <= n / 2; ++k)
            for (int m = 0; m <= n / 2; ++m) {
                const long long term =
                    static_cast<long long>(n - 2 * k) * (n - 2 * m) * binomial(n, k) * binomial(n, m);
                c.double_sum += ((k + m) % 2 == 0) ? term : -term;
            }
        c.ok = c.weighted_sum == c.weighted_rhs && c.alternating_sum == c.alternating_rhs && c.double_sum == 0;
        out.push_back(c);
    }
    return out;
}

struct TableRow {
    std::string label;
    int k = 0, m = 0;  // representative pair (k >= m when merged)
    long long observed = 0;
    long long expected = 0;
    std::string ratio;  // "-" when expected is 0
};

/// Census rows with printed expected values, sorted by expected ascending then
/// (k, m). With merge_symmetric the classes (k,m) and (m,k) fold into one row.
inline std::vector<TableRow> table_report(const ParityCensus& census, bool merge_symmetric,
                                          RoundMode mode = RoundMode::half_up) {
    std::vector<TableRow> rows;
    const int half = census.n / 2;
    for (int k = 0; k <= half; ++k)
        for (int m = 0; m <= half; ++m) {
            if (merge_symmetric && m > k) continue;
            TableRow row;
            row.k = k;
            row.m = m;
            if (merge_symmetric && k != m) {
                row.label = "(" + std::to_string(k) + "," + std::to_string(m) + ")+(" + std::to_string(m) +
                            "," + std::to_string(k) + ")";
                row.observed = census.at(k, m) + census.at(m, k);
                row.expected = 2 * expected_printed(census.n, k, m, census.total, mode);
            } else {
                row.label = "(" + std::to_string(k) + "," + std::to_string(m) + ")";
                row.observed = census.at(k, m);
                row.expected = expected_printed(census.n, k, m, census.total, mode);
            }
            if (row.expected == 0) {
                row.ratio = "-";
            } else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.2f",
                              static_cast<double>(row.observed) / static_cast<double>(row.expected));
                row.ratio = buf;
            }
            rows.push_back(std::move(row));
        }
    std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.expected != b.expected) return a.expected < b.expected;
        if (a.k != b.k) return a.k < b.k;
        return a.m < b.m;
    });
    return rows;
}

inline std::string census_csv(const ParityCensus& census, bool merge_symmetric,
                              RoundMode mode = RoundMode::half_up) {
    std::ostringstream os;
    os << "# n=" << census.n << " total=" << census.total << " mode="
       << (census.mode == ParityCensus::Mode::exact ? "exact" : "sampled");
    if (census.mode == ParityCensus::Mode::sampled) os << " seed=" << census.seed << " steps=" << census.steps;
    os << '\n' << "k,m,observed,expected,ratio\n";
    for (const auto& row : table_report(census, merge_symmetric, mode))
        os << row.k << ',' << row.m << ',' << row.observed << ',' << row.expected << ',' << row.ratio << '\n';
    return os.str();
}

}  // namespace latin
