#pragma once

#include "latin/square.hpp"

namespace latin::fixtures {

/// Order-6 square of parity type (3,3) whose autotopy group attains the
/// n*n!/C(n,k) bound with order 216.
inline LatinSquare order6_type33() {
    return LatinSquare::from_grid(6, {
        1, 2, 3, 4, 5, 6,
        2, 1, 4, 3, 6, 5,
        3, 5, 1, 6, 2, 4,
        4, 6, 2, 5, 1, 3,
        5, 3, 6, 1, 4, 2,
        6, 4, 5, 2, 3, 1,
    });
}

/// Order-7 square driving the cycle-structure worked example: matching rows
/// {1,4,5}, 36 candidate alphas, 252 checks, autotopy group of order 3.
inline LatinSquare order7_cycle_example() {
    return LatinSquare::from_grid(7, {
        1, 2, 3, 4, 5, 6, 7,
        2, 1, 4, 3, 6, 7, 5,
        3, 4, 2, 5, 7, 1, 6,
        4, 6, 7, 1, 2, 5, 3,
        5, 7, 6, 2, 1, 3, 4,
        6, 3, 5, 7, 4, 2, 1,
        7, 5, 1, 6, 3, 4, 2,
    });
}

/// Order-6 square where every k matches: |U I_k| = 24, cycle bound 144,
/// actual autotopy group order 72.
inline LatinSquare order6_group_like() {
    return LatinSquare::from_grid(6, {
        1, 2, 3, 4, 5, 6,
        2, 1, 4, 3, 6, 5,
        3, 4, 5, 6, 1, 2,
        4, 3, 6, 5, 2, 1,
        5, 6, 1, 2, 3, 4,
        6, 5, 2, 1, 4, 3,
    });
}

}  // namespace latin::fixtures
