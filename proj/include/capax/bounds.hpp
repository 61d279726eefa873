#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "capax/combinatorics.hpp"
#include "capax/set_function.hpp"

namespace capax {

/// Binomial column index attaining the upper Möbius bound at cardinality a.
inline int upper_bound_index(int a) { return 2 * (a / 4); }

/// Binomial column index attaining the lower Möbius bound at cardinality a.
inline int lower_bound_index(int a) { return 2 * ((a - 1) / 4) + 1; }

/// Exact range of the Möbius coefficient at a set of cardinality a over
/// all normalized capacities on n elements:
///   a >= 2:        -C(a-1, l'_a) <= m(A) <= C(a-1, l_a)
///   a == 1 < n:     0 <= m(A) <= 1
///   a == n == 1:    m(A) = 1 (forced by normalization)
/// with l_a = 2*floor(a/4) and l'_a = 2*floor((a-1)/4) + 1.
struct bound_spec {
    int cardinality = 0;
    int upper_index = 0;
    int lower_index = 0;
    std::int64_t upper = 0;
    std::int64_t lower = 0;
};

inline bound_spec mobius_bounds(int a, int n) {
    if (a < 1 || a > n)
        throw std::invalid_argument("mobius_bounds: cardinality must lie in 1..n");
    bound_spec spec;
    spec.cardinality = a;
    spec.upper_index = upper_bound_index(a);
    spec.lower_index = lower_bound_index(a);
    if (a == 1) {
        spec.upper = 1;
        spec.lower = n == 1 ? 1 : 0;
    } else {
        spec.upper = binomial(a - 1, spec.upper_index);
        spec.lower = -binomial(a - 1, spec.lower_index);
    }
    return spec;
}

/// Capacity attaining the upper Möbius bound at A:
///   value 1 iff |B ∩ A| >= |A| - l_{|A|}.
/// A {0,1}-valued normalized capacity whose Möbius coefficient at A equals
/// C(|A|-1, l_{|A|}); its values off the sublattice 2^A are the monotonic
/// cover of the optimal indicator on 2^A.
template <class T = rational>
set_function<T> extremal_upper(mask_t a, ground_set ground) {
    ground.require_mask(a);
    if (a == 0)
        throw std::invalid_argument("extremal_upper: the target set must be nonempty");
    const int asize = popcount(a);
    const int threshold = asize - upper_bound_index(asize);
    return set_function<T>::indicator(
        ground, [&](mask_t b) { return popcount(b & a) >= threshold; });
}

/// Capacity attaining the lower Möbius bound at A (|A| >= 2):
///   value 1 iff |B ∩ A| >= |A| - l'_{|A|}.
/// For |A| = 1 the lower bound is 0 (1 when n = 1, forced by
/// normalization); the additive vertex concentrated on one element
/// outside A attains it while staying 1-additive, so the |A|-additivity
/// of these witnesses holds at every cardinality. With no element
/// outside A (n = 1) the same form is the forced capacity.
template <class T = rational>
set_function<T> extremal_lower(mask_t a, ground_set ground) {
    ground.require_mask(a);
    if (a == 0)
        throw std::invalid_argument("extremal_lower: the target set must be nonempty");
    const int asize = popcount(a);
    if (asize == 1) {
        const mask_t outside = ground.full() & ~a;
        const mask_t anchor = outside != 0 ? (outside & -outside) : a;
        return set_function<T>::indicator(ground,
                                          [&](mask_t b) { return (b & anchor) != 0; });
    }
    const int threshold = asize - lower_bound_index(asize);
    return set_function<T>::indicator(
        ground, [&](mask_t b) { return popcount(b & a) >= threshold; });
}

/// Extreme point of the symmetric-capacity polytope: value 1 iff
/// |B| >= n - k, for k in 0..n-1. k = 0 is the unanimity game on N.
template <class T = rational>
set_function<T> symmetric_vertex(int k, ground_set ground) {
    if (k < 0 || k >= ground.n())
        throw std::invalid_argument("symmetric_vertex: k must lie in 0..n-1");
    const int threshold = ground.n() - k;
    return set_function<T>::indicator(
        ground, [&](mask_t b) { return popcount(b) >= threshold; });
}

/// Closed form for the Möbius coefficient at N of symmetric_vertex(k, n):
/// (-1)^k C(n-1, k). The signed column maximized over even k (resp.
/// minimized over odd k) yields the exact bounds.
inline std::int64_t symmetric_vertex_mobius_at_full(int k, int n) {
    if (k < 0 || k >= n)
        throw std::invalid_argument("symmetric_vertex_mobius_at_full: k must lie in 0..n-1");
    const std::int64_t value = binomial(n - 1, k);
    return k % 2 == 0 ? value : -value;
}

/// Partial alternating row sum of binomials,
///   sum over l in [0, k] of (-1)^l C(n, l)   (0 <= k < n),
/// verified on the fly against its closed form (-1)^k C(n-1, k).
inline std::int64_t alternating_binomial_sum(int n, int k) {
    if (n < 1 || k < 0 || k >= n)
        throw std::invalid_argument("alternating_binomial_sum: requires 0 <= k < n");
    std::int64_t sum = 0;
    for (int l = 0; l <= k; ++l) {
        const std::int64_t term = binomial(n, l);
        if (l % 2 == 0) {
            if (__builtin_add_overflow(sum, term, &sum))
                throw std::overflow_error("alternating_binomial_sum: 64-bit overflow");
        } else {
            if (__builtin_sub_overflow(sum, term, &sum))
                throw std::overflow_error("alternating_binomial_sum: 64-bit overflow");
        }
    }
    const std::int64_t closed = k % 2 == 0 ? binomial(n - 1, k) : -binomial(n - 1, k);
    if (sum != closed)
        throw std::logic_error("alternating_binomial_sum: identity violated");
    return sum;
}

struct bound_table_row {
    int cardinality = 0;
    std::int64_t upper = 0;
    std::int64_t lower = 0;
};

/// Rows (a, upper, lower) for a = 1..max_a. The a = 1 row uses the a < n
/// convention, i.e. bounds [0, 1].
inline std::vector<bound_table_row> bound_table(int max_a) {
    if (max_a < 1)
        throw std::invalid_argument("bound_table: max_a must be at least 1");
    std::vector<bound_table_row> rows;
    rows.reserve(static_cast<std::size_t>(max_a));
    for (int a = 1; a <= max_a; ++a) {
        const bound_spec spec = mobius_bounds(a, max_a < 2 ? 2 : max_a + 1);
        rows.push_back({a, spec.upper, spec.lower});
    }
    return rows;
}

/// One row of the symmetric-vertex Möbius matrix: the signed binomials
/// (-1)^k C(n-1, k) for k = 0..n-1, with the positions of the extreme
/// entries. min_at is -1 for n = 1, where no odd column exists.
struct vertex_matrix_row {
    int n = 0;
    std::vector<std::int64_t> values;
    int max_at = -1;
    int min_at = -1;
};

/// Rows n = 1..max_n of the symmetric-vertex Möbius matrix. The marked
/// maximum column is always l_n and the marked minimum column l'_n; both
/// memberships in the true argmax/argmin sets are verified (ties in the
/// binomial row resolve toward these indices).
inline std::vector<vertex_matrix_row> vertex_mobius_matrix(int max_n) {
    if (max_n < 1)
        throw std::invalid_argument("vertex_mobius_matrix: max_n must be at least 1");
    std::vector<vertex_matrix_row> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        vertex_matrix_row row;
        row.n = n;
        std::int64_t best_max = 0;
        std::int64_t best_min = 0;
        for (int k = 0; k < n; ++k) {
            const std::int64_t v = symmetric_vertex_mobius_at_full(k, n);
            row.values.push_back(v);
            if (v > best_max)
                best_max = v;
            if (v < best_min)
                best_min = v;
        }
        row.max_at = upper_bound_index(n);
        if (row.values[static_cast<std::size_t>(row.max_at)] != best_max)
            throw std::logic_error("vertex_mobius_matrix: max marker is not an argmax");
        if (n >= 2) {
            row.min_at = lower_bound_index(n);
            if (row.values[static_cast<std::size_t>(row.min_at)] != best_min)
                throw std::logic_error("vertex_mobius_matrix: min marker is not an argmin");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Large-n estimate 4^{n/2} / sqrt(pi*n/2) of the bound magnitude,
/// evaluated in log space. Documentation-grade: at reachable n it runs
/// roughly a factor of 2 above the exact bound C(n-1, l_n) (943.4 vs 462
/// at n = 12), so no convergence tolerance is asserted anywhere.
inline double asymptotic_estimate(int n) {
    if (n < 2)
        throw std::invalid_argument("asymptotic_estimate: n must be at least 2");
    const double log_value =
        (n / 2.0) * std::log(4.0) - 0.5 * std::log(M_PI * n / 2.0);
    return std::exp(log_value);
}

}  // namespace capax
