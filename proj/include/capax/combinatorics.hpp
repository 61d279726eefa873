#pragma once

#include <cstdint>
#include <stdexcept>

#include "capax/rational.hpp"

namespace capax {

/// Exact binomial coefficient via the multiplicative formula with exact
/// division at each step. No floating point; overflow throws.
inline std::int64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::int64_t next;
        if (__builtin_mul_overflow(result, static_cast<std::int64_t>(n - k + i), &next))
            throw std::overflow_error("binomial: 64-bit overflow");
        result = next / i;  // divides exactly: next = C(n-k+i, i) * i!
    }
    return result;
}

/// k! as an exact rational; overflows past 20!.
inline rational factorial_rational(int k) {
    if (k < 0)
        throw std::invalid_argument("factorial: negative argument");
    rational result(1);
    for (int i = 2; i <= k; ++i)
        result *= rational(i);
    return result;
}

}  // namespace capax
