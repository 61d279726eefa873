#pragma once

#include <cmath>
#include <cstdint>

#include "capax/rational.hpp"

namespace capax {

/// Scalar mode of a set function: exact rationals or doubles.
///
/// Mixing the two modes in one operation is a compile-time error by
/// construction; every operation is templated on one scalar type.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<rational> {
    static constexpr bool exact = true;
    static rational zero() { return rational(); }
    static rational one() { return rational(1); }
    static rational from_int(std::int64_t v) { return rational(v); }
    static rational ratio(std::int64_t num, std::int64_t den) { return rational(num, den); }
    static rational from_rational(const rational& r) { return r; }
    static double to_double(const rational& r) { return r.to_double(); }
    // Exact mode compares exactly: both default tolerances are 0.
    static rational monotonicity_tolerance() { return rational(); }
    static rational match_tolerance() { return rational(); }
    static bool eq(const rational& a, const rational& b, const rational& tol) {
        return abs(a - b) <= tol;
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(std::int64_t v) { return static_cast<double>(v); }
    static double ratio(std::int64_t num, std::int64_t den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double from_rational(const rational& r) { return r.to_double(); }
    static double to_double(double v) { return v; }
    static double monotonicity_tolerance() { return 1e-12; }
    // Tolerance for value-matching checks (transform agreement, indifference).
    static double match_tolerance() { return 1e-9; }
    static bool eq(double a, double b, double tol) { return std::abs(a - b) <= tol; }
};

}  // namespace capax
