#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace latin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input that fails a structural check (bad permutation, bad square, bad text).
struct validation_error : error {
    using error::error;
};

/// A broken internal invariant. Indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

#define LATIN_ASSERT(cond, msg)                                     \
    do {                                                            \
        if (!(cond)) throw ::latin::internal_error(msg);            \
    } while (0)

/// Bijection on {1..n}, stored in one-line form: image(i) is the image of i.
class Permutation {
public:
    /// Identity on {1..n}.
    explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
        if (n < 1) throw validation_error("permutation degree must be positive");
        std::iota(img_.begin(), img_.end(), 1);
    }

    static Permutation from_one_line(std::vector<int> img) {
        const int n = static_cast<int>(img.size());
        if (n < 1) throw validation_error("permutation degree must be positive");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : img) {
            if (v < 1 || v > n)
                throw validation_error("one-line entry " + std::to_string(v) +
                                       " out of range 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(v - 1)]++)
                throw validation_error("one-line form repeats " + std::to_string(v));
        }
        return Permutation(std::move(img), unchecked_t{});
    }

    int degree() const { return static_cast<int>(img_.size()); }

    /// Image of x, 1-indexed.
    int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)]; }

    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct unchecked_t {};
    Permutation(std::vector<int> img, unchecked_t) : img_(std::move(img)) {}

    std::vector<int> img_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
};

/// (a*b)(x) = a(b(x)); b is applied first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw validation_error("compose: degree mismatch (" + std::to_string(a.degree()) +
                               " vs " + std::to_string(b.degree()) + ")");
    const int n = a.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) img[static_cast<std::size_t>(x - 1)] = a(b(x));
    return Permutation(std::move(img), Permutation::unchecked_t{});
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

inline Permutation inverse(const Permutation& a) {
    const int n = a.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) img[static_cast<std::size_t>(a(x) - 1)] = x;
    return Permutation(std::move(img), Permutation::unchecked_t{});
}

/// by * a * by^-1.
inline Permutation conjugate(const Permutation& a, const Permutation& by) {
    if (a.degree() != by.degree()) throw validation_error("conjugate: degree mismatch");
    return compose(by, compose(a, inverse(by)));
}

/// Disjoint cycles covering {1..n}. Each cycle starts at its minimum element;
/// cycles are ordered by (length descending, minimum element ascending).
/// Fixed points appear as length-1 cycles.
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& a) {
    const int n = a.degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x - 1)] = 1;
            cyc.push_back(x);
            x = a(x);
        } while (x != start);
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& l, const auto& r) {
        if (l.size() != r.size()) return l.size() > r.size();
        return l.front() < r.front();
    });
    return cycles;
}

/// +1 iff the permutation is even; equals (-1)^(n - number of cycles).
inline int sign(const Permutation& a) {
    const int n = a.degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        ++cycles;
        for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = a(x))
            seen[static_cast<std::size_t>(x - 1)] = 1;
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

/// Multiset of cycle lengths, kept as a non-increasing integer partition of n.
/// Orders lexicographically on the parts, which gives a fixed total order on
/// the cycle types of a given degree.
struct CycleType {
    std::vector<int> parts;

    static CycleType of(const Permutation& a) {
        CycleType t;
        for (const auto& c : cycle_decomposition(a)) t.parts.push_back(static_cast<int>(c.size()));
        return t;
    }

    int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    /// Longest cycle length.
    int max_part() const { return parts.empty() ? 0 : parts.front(); }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ',';
            os << parts[i];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

inline CycleType cycle_type(const Permutation& a) { return CycleType::of(a); }

/// Text form "(1,2)(3,4)(5,7,6)". Fixed points may be elided.
inline std::string format_cycles(const Permutation& a, bool elide_fixed = false) {
    std::ostringstream os;
    bool wrote = false;
    for (const auto& cyc : cycle_decomposition(a)) {
        if (elide_fixed && cyc.size() == 1) continue;
        os << '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ',';
            os << cyc[i];
        }
        os << ')';
        wrote = true;
    }
    if (!wrote) os << "()";
    return os.str();
}

/// Parse cycle notation into a permutation of degree n. Elements absent from
/// the text are fixed points.
inline Permutation parse_cycles(const std::string& text, int n) {
    if (n < 1) throw validation_error("permutation degree must be positive");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw validation_error("cycle notation: expected '('");
        ++i;
        skip_ws();
        if (i < text.size() && text[i] == ')') {  // "()" denotes the identity
            ++i;
            skip_ws();
            continue;
        }
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw validation_error("cycle notation: expected integer");
            int v = std::stoi(text.substr(start, i - start));
            if (v < 1 || v > n)
                throw validation_error("cycle notation: element " + std::to_string(v) +
                                       " out of range 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(v - 1)]++)
                throw validation_error("cycle notation: element " + std::to_string(v) + " repeated");
            cyc.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw validation_error("cycle notation: expected ',' or ')'");
        }
        for (std::size_t p = 0; p < cyc.size(); ++p)
            img[static_cast<std::size_t>(cyc[p] - 1)] = cyc[(p + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation::from_one_line(std::move(img));
}

inline std::string format_one_line(const Permutation& a) {
    std::ostringstream os;
    for (int x = 1; x <= a.degree(); ++x) {
        if (x > 1) os << ' ';
        os << a(x);
    }
    return os.str();
}

inline Permutation parse_one_line(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> img;
    int v;
    while (is >> v) img.push_back(v);
    return Permutation::from_one_line(std::move(img));
}

}  // namespace latin
