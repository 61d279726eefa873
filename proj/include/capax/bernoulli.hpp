#pragma once

#include <vector>

#include "capax/combinatorics.hpp"
#include "capax/rational.hpp"

namespace capax {

/// Bernoulli numbers B_0..B_max as exact rationals, under the convention
/// B_1 = -1/2, defined by B_0 = 1 and
///   sum over j in [0, m] of C(m+1, j) * B_j = 0   for every m >= 1.
/// These are the coefficients of the inverse of the interaction transform.
/// Arithmetic overflow of the rational representation throws.
inline std::vector<rational> bernoulli_numbers(int max_index) {
    if (max_index < 0)
        throw std::invalid_argument("bernoulli_numbers: negative index");
    std::vector<rational> table;
    table.reserve(static_cast<std::size_t>(max_index) + 1);
    table.push_back(rational(1));
    for (int m = 1; m <= max_index; ++m) {
        rational sum;
        for (int j = 0; j < m; ++j)
            sum += rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
        table.push_back(-sum / rational(m + 1));
    }
    return table;
}

}  // namespace capax
