#pragma once

#include <cstdint>
#include <random>

#include "capax/capacity.hpp"
#include "capax/rational.hpp"
#include "capax/set_function.hpp"

namespace capax::testing {

/// Small random rationals (|num| <= 10, den <= 12) keep every transform of
/// a full random table inside checked 64-bit components up to n = 8.
inline rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> num(-10, 10);
    std::uniform_int_distribution<std::int64_t> den(1, 12);
    return rational(num(rng), den(rng));
}

inline set_function<rational> random_rational_set_function(ground_set ground,
                                                           std::mt19937& rng) {
    set_function<rational> f(ground);
    for (mask_t m = 0; m <= ground.full(); ++m)
        f[m] = random_rational(rng);
    return f;
}

inline set_function<double> random_float_set_function(ground_set ground, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    set_function<double> f(ground);
    for (mask_t m = 0; m <= ground.full(); ++m)
        f[m] = dist(rng);
    return f;
}

/// Random normalized capacity: nonnegative values, grounded, then the
/// monotonic cover and an exact rescale to 1 at N.
inline set_function<rational> random_rational_capacity(ground_set ground, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> num(0, 10);
    std::uniform_int_distribution<std::int64_t> den(1, 8);
    set_function<rational> f(ground);
    for (mask_t m = 1; m <= ground.full(); ++m)
        f[m] = rational(num(rng), den(rng));
    f = monotonic_cover(f);
    const rational top = f[ground.full()];
    if (top.is_zero()) {
        f[ground.full()] = rational(1);
        return f;
    }
    for (mask_t m = 1; m <= ground.full(); ++m)
        f[m] /= top;
    return f;
}

inline set_function<double> random_float_capacity(ground_set ground, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    set_function<double> f(ground);
    for (mask_t m = 1; m <= ground.full(); ++m)
        f[m] = dist(rng);
    f = monotonic_cover(f);
    const double top = f[ground.full()];
    for (mask_t m = 1; m <= ground.full(); ++m)
        f[m] /= top;
    return f;
}

}  // namespace capax::testing
