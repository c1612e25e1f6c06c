#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "latin/perm.hpp"

namespace latin {

/// Validated n x n grid over {1..n}: each symbol appears exactly once in every
/// row and every column. Rows, columns and entries are 1-indexed.
class LatinSquare {
public:
    static LatinSquare from_grid(int n, std::vector<int> grid) {
        if (n < 1) throw validation_error("order must be positive");
        if (grid.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw validation_error("grid has " + std::to_string(grid.size()) + " entries, expected " +
                                   std::to_string(n * n));
        LatinSquare sq(n, std::move(grid));
        sq.validate();
        return sq;
    }

    int order() const { return n_; }

    /// Symbol at row r, column c (1-indexed).
    int at(int r, int c) const { return g_[idx(r, c)]; }

    const std::vector<int>& grid() const { return g_; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    LatinSquare(int n, std::vector<int> grid) : n_(n), g_(std::move(grid)) {}

    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(c - 1);
    }

    void validate() const {
        std::vector<char> seen(static_cast<std::size_t>(n_));
        for (int r = 1; r <= n_; ++r) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int c = 1; c <= n_; ++c) {
                int s = at(r, c);
                if (s < 1 || s > n_)
                    throw validation_error("row " + std::to_string(r) + ", column " + std::to_string(c) +
                                           ": symbol " + std::to_string(s) + " out of range 1.." +
                                           std::to_string(n_));
                if (seen[static_cast<std::size_t>(s - 1)]++)
                    throw validation_error("row " + std::to_string(r) + ": duplicate symbol " +
                                           std::to_string(s));
            }
        }
        for (int c = 1; c <= n_; ++c) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int r = 1; r <= n_; ++r) {
                int s = at(r, c);
                if (seen[static_cast<std::size_t>(s - 1)]++)
                    throw validation_error("column " + std::to_string(c) + ": duplicate symbol " +
                                           std::to_string(s));
            }
        }
    }

    int n_;
    std::vector<int> g_;

    friend class SquareBuilder;
};

/// Constructs squares whose validity is already guaranteed by the caller
/// (images of valid squares under isotopisms, enumerator output).
class SquareBuilder {
public:
    static LatinSquare unchecked(int n, std::vector<int> grid) {
        return LatinSquare(n, std::move(grid));
    }
};

/// Ordered triple acting on rows, columns and symbols:
/// cell (r, c, s) of L maps to (alpha(r), beta(c), gamma(s)).
struct Isotopism {
    Permutation alpha, beta, gamma;

    Isotopism(Permutation a, Permutation b, Permutation g)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
        if (alpha.degree() != beta.degree() || alpha.degree() != gamma.degree())
            throw validation_error("isotopism components must have equal degrees");
    }

    static Isotopism identity(int n) { return Isotopism(Permutation(n), Permutation(n), Permutation(n)); }

    int degree() const { return alpha.degree(); }

    bool is_identity() const { return alpha.is_identity() && beta.is_identity() && gamma.is_identity(); }

    friend bool operator==(const Isotopism&, const Isotopism&) = default;
    friend auto operator<=>(const Isotopism&, const Isotopism&) = default;
};

/// Componentwise composition; (t2 * t1) applied to L equals t2(t1(L)).
inline Isotopism compose(const Isotopism& t2, const Isotopism& t1) {
    return Isotopism(compose(t2.alpha, t1.alpha), compose(t2.beta, t1.beta), compose(t2.gamma, t1.gamma));
}

inline Isotopism operator*(const Isotopism& t2, const Isotopism& t1) { return compose(t2, t1); }

inline Isotopism inverse(const Isotopism& t) {
    return Isotopism(inverse(t.alpha), inverse(t.beta), inverse(t.gamma));
}

inline LatinSquare apply_isotopism(const Isotopism& t, const LatinSquare& sq) {
    const int n = sq.order();
    if (t.degree() != n) throw validation_error("isotopism degree does not match square order");
    std::vector<int> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            std::size_t pos = static_cast<std::size_t>(t.alpha(r) - 1) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(t.beta(c) - 1);
            out[pos] = t.gamma(sq.at(r, c));
        }
    return SquareBuilder::unchecked(n, std::move(out));
}

/// Row i as a permutation: sigma(s) = c exactly when the symbol s sits in
/// column c of row i (the inverse of the position-to-symbol map).
inline Permutation row_perm(const LatinSquare& sq, int i) {
    const int n = sq.order();
    if (i < 1 || i > n) throw validation_error("row index " + std::to_string(i) + " out of range");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int c = 1; c <= n; ++c) img[static_cast<std::size_t>(sq.at(i, c) - 1)] = c;
    return Permutation::from_one_line(std::move(img));
}

/// Column j as a permutation: pi(s) = r exactly when the symbol s sits in
/// row r of column j.
inline Permutation col_perm(const LatinSquare& sq, int j) {
    const int n = sq.order();
    if (j < 1 || j > n) throw validation_error("column index " + std::to_string(j) + " out of range");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) img[static_cast<std::size_t>(sq.at(r, j) - 1)] = r;
    return Permutation::from_one_line(std::move(img));
}

/// First row and first column are the sequence 1..n.
inline bool is_reduced(const LatinSquare& sq) {
    for (int c = 1; c <= sq.order(); ++c)
        if (sq.at(1, c) != c) return false;
    for (int r = 1; r <= sq.order(); ++r)
        if (sq.at(r, 1) != r) return false;
    return true;
}

struct Reduction {
    LatinSquare square;
    Isotopism iso;  // maps the input to `square`
};

/// Sort the rows so the first column becomes 1..n, then sort the columns
/// (fixing column 1) so the first row becomes 1..n.
inline Reduction reduce(const LatinSquare& sq) {
    const int n = sq.order();
    std::vector<int> a(static_cast<std::size_t>(n));
    int top = 1;  // row that moves to the top
    for (int r = 1; r <= n; ++r) {
        a[static_cast<std::size_t>(r - 1)] = sq.at(r, 1);
        if (sq.at(r, 1) == 1) top = r;
    }
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int c = 1; c <= n; ++c) b[static_cast<std::size_t>(c - 1)] = sq.at(top, c);
    Isotopism iso(Permutation::from_one_line(std::move(a)), Permutation::from_one_line(std::move(b)),
                  Permutation(n));
    LatinSquare out = apply_isotopism(iso, sq);
    LATIN_ASSERT(is_reduced(out), "reduce produced a non-reduced square");
    return Reduction{std::move(out), std::move(iso)};
}

/// Canonical text form: first line n, then n lines of n space-separated
/// symbols. Also accepts the single-line compact form of n*n integers.
inline LatinSquare parse_square(const std::string& text) {
    std::istringstream is(text);
    std::vector<long long> tok;
    long long v;
    while (is >> v) tok.push_back(v);
    if (!is.eof()) throw validation_error("square text: non-numeric input");
    if (tok.empty()) throw validation_error("square text: empty input");
    auto as_grid = [](std::vector<long long>::const_iterator first, int n) {
        std::vector<int> grid;
        grid.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n * n; ++i, ++first) {
            if (*first < 1 || *first > n)
                throw validation_error("square text: symbol " + std::to_string(*first) +
                                       " out of range 1.." + std::to_string(n));
            grid.push_back(static_cast<int>(*first));
        }
        return grid;
    };
    long long n0 = tok.front();
    if (n0 >= 1 && n0 <= 1000 && tok.size() == 1 + static_cast<std::size_t>(n0) * static_cast<std::size_t>(n0))
        return LatinSquare::from_grid(static_cast<int>(n0), as_grid(tok.begin() + 1, static_cast<int>(n0)));
    // compact form: token count must be a perfect square
    std::size_t m = tok.size();
    std::size_t n = 0;
    while ((n + 1) * (n + 1) <= m) ++n;
    if (n * n != m)
        throw validation_error("square text: expected 'n' followed by n*n symbols, or n*n symbols");
    return LatinSquare::from_grid(static_cast<int>(n), as_grid(tok.begin(), static_cast<int>(n)));
}

inline std::string emit_square(const LatinSquare& sq) {
    std::ostringstream os;
    os << sq.order() << '\n';
    for (int r = 1; r <= sq.order(); ++r) {
        for (int c = 1; c <= sq.order(); ++c) {
            if (c > 1) os << ' ';
            os << sq.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

inline std::string emit_compact(const LatinSquare& sq) {
    std::ostringstream os;
    const int n = sq.order();
    for (int i = 0; i < n * n; ++i) {
        if (i) os << ' ';
        os << sq.grid()[static_cast<std::size_t>(i)];
    }
    return os.str();
}

/// Compact byte key for hash sets of same-order squares.
inline std::string grid_key(const LatinSquare& sq) {
    std::string key;
    key.reserve(sq.grid().size());
    for (int s : sq.grid()) key.push_back(static_cast<char>(s));
    return key;
}

}  // namespace latin
