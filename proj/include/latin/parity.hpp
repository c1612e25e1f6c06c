#pragma once

#include <optional>
#include <vector>

#include "latin/square.hpp"

namespace latin {

namespace detail {

/// Sign of row r read directly off the grid. The row sequence is the inverse
/// of the row permutation, so the signs agree.
inline int row_seq_sign(const int* grid, int n, int r) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    const int* row = grid + static_cast<std::size_t>(r - 1) * n;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        ++cycles;
        int x = start;
        while (!seen[static_cast<std::size_t>(x - 1)]) {
            seen[static_cast<std::size_t>(x - 1)] = 1;
            x = row[x - 1];
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

inline int col_seq_sign(const int* grid, int n, int c) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        ++cycles;
        int x = start;
        while (!seen[static_cast<std::size_t>(x - 1)]) {
            seen[static_cast<std::size_t>(x - 1)] = 1;
            x = grid[static_cast<std::size_t>(x - 1) * n + (c - 1)];
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace detail

inline std::vector<int> row_signs(const LatinSquare& sq) {
    std::vector<int> s;
    for (int i = 1; i <= sq.order(); ++i) s.push_back(detail::row_seq_sign(sq.grid().data(), sq.order(), i));
    return s;
}

inline std::vector<int> col_signs(const LatinSquare& sq) {
    std::vector<int> s;
    for (int j = 1; j <= sq.order(); ++j) s.push_back(detail::col_seq_sign(sq.grid().data(), sq.order(), j));
    return s;
}

/// Product of the signs of all rows and columns.
inline int square_parity(const LatinSquare& sq) {
    int p = 1;
    for (int s : row_signs(sq)) p *= s;
    for (int s : col_signs(sq)) p *= s;
    return p;
}

/// k = minority count of the row signs, m the same for columns; both <= n/2.
struct ParityType {
    int n = 0;
    int k = 0;
    int m = 0;

    friend bool operator==(const ParityType&, const ParityType&) = default;
};

namespace detail {

inline int minority_count(const std::vector<int>& signs) {
    int odd = 0;
    for (int s : signs)
        if (s < 0) ++odd;
    return std::min(odd, static_cast<int>(signs.size()) - odd);
}

/// Indices of the minority sign; ties (possible only for even n) resolve to
/// the odd-sign indices.
inline std::vector<int> minority_indices(const std::vector<int>& signs) {
    int odd = 0;
    for (int s : signs)
        if (s < 0) ++odd;
    const int n = static_cast<int>(signs.size());
    const int pick = (odd <= n - odd) ? -1 : 1;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (signs[static_cast<std::size_t>(i)] == pick) out.push_back(i + 1);
    return out;
}

}  // namespace detail

inline ParityType parity_type(const LatinSquare& sq) {
    return ParityType{sq.order(), detail::minority_count(row_signs(sq)), detail::minority_count(col_signs(sq))};
}

/// Row set I and column set J realizing the parity type.
struct ParitySet {
    int n = 0;
    std::vector<int> rows;  // I
    std::vector<int> cols;  // J

    friend bool operator==(const ParitySet&, const ParitySet&) = default;
};

inline ParitySet parity_set(const LatinSquare& sq) {
    return ParitySet{sq.order(), detail::minority_indices(row_signs(sq)), detail::minority_indices(col_signs(sq))};
}

/// Number of even squares among the class_size reduced squares isotopic to a
/// square of the given parity type (n odd). The complementary count is odd.
inline long long theorem1_even_count(const ParityType& pt, long long class_size) {
    const long long n = pt.n, k = pt.k, m = pt.m;
    if (n % 2 == 0) throw validation_error("theorem1_even_count requires odd order");
    const long long num = ((k - m) % 2 == 0) ? k * m + (n - k) * (n - m) : k * (n - m) + m * (n - k);
    const long long prod = num * class_size;
    if (prod % (n * n) != 0)
        throw validation_error("theorem1_even_count: non-integral result, class size is inconsistent");
    return prod / (n * n);
}

/// Parity of the reduced image of L under the triple built from (alpha, j):
/// sign of row alpha^-1(1), times sign of column j, times the parity of L.
inline int lemma22_predicted_parity(const LatinSquare& sq, const Permutation& alpha, int j) {
    if (sq.order() % 2 == 0) throw validation_error("lemma22_predicted_parity requires odd order");
    if (!is_reduced(sq)) throw validation_error("lemma22_predicted_parity requires a reduced square");
    if (alpha.degree() != sq.order()) throw validation_error("alpha degree does not match square order");
    if (j < 1 || j > sq.order()) throw validation_error("column index out of range");
    const int i = inverse(alpha)(1);
    return sign(row_perm(sq, i)) * sign(col_perm(sq, j)) * square_parity(sq);
}

/// Largest power of p that can divide the autotopy group order of a square of
/// prime order p with this parity type; nullopt when the type is (0,0) and
/// the test gives no bound.
inline std::optional<int> prime_divisibility_bound(const ParityType& pt, int p) {
    if (p != pt.n) throw validation_error("prime_divisibility_bound requires p equal to the order");
    if (p < 3 || p % 2 == 0) throw validation_error("prime_divisibility_bound requires an odd prime");
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw validation_error(std::to_string(p) + " is not prime");
    if (pt.k != 0 && pt.m != 0) return 0;
    if (pt.k != 0 || pt.m != 0) return 1;
    return std::nullopt;
}

/// Cayley table of Z_n in reduced form.
inline LatinSquare cyclic_table(int n) {
    std::vector<int> grid(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) grid[static_cast<std::size_t>(r) * n + c] = (r + c) % n + 1;
    return LatinSquare::from_grid(n, std::move(grid));
}

}  // namespace latin
