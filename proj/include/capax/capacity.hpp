#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "capax/combinatorics.hpp"
#include "capax/set_function.hpp"

namespace capax {

/// Result of capacity validation. The monotonicity witness, when present,
/// is a covering pair (A, A ∪ {i}) whose values decrease.
struct capacity_report {
    bool grounded = false;    // value at the empty set is 0
    bool monotone = false;
    bool normalized = false;  // value at N is 1
    std::optional<std::pair<mask_t, mask_t>> witness;

    bool ok() const { return grounded && monotone && normalized; }
};

/// Checks grounding, monotonicity and normalization. Monotonicity is
/// verified on covering edges only (A vs A ∪ {i}), which is equivalent to
/// the all-pairs definition and costs O(n·2^n).
template <class T>
capacity_report validate_capacity(const set_function<T>& xi,
                                  T tolerance = scalar_traits<T>::monotonicity_tolerance()) {
    using st = scalar_traits<T>;
    capacity_report report;
    report.grounded = st::eq(xi[0], st::zero(), tolerance);
    report.normalized = st::eq(xi[xi.full()], st::one(), tolerance);
    report.monotone = true;
    for (mask_t a = 0; a <= xi.full() && report.monotone; ++a) {
        for (int i = 1; i <= xi.n(); ++i) {
            if (contains(a, i))
                continue;
            const mask_t b = a | element_bit(i);
            if (xi[a] > xi[b] + tolerance) {
                report.monotone = false;
                report.witness = std::make_pair(a, b);
                break;
            }
        }
    }
    return report;
}

/// Smallest monotone function dominating xi: cover(A) = max_{B ⊆ A} xi(B),
/// computed with the covering-edge recurrence
/// cover(A) = max(xi(A), max_{i ∈ A} cover(A \ {i})) in O(n·2^n).
/// Requires xi(∅) = 0.
template <class T>
set_function<T> monotonic_cover(const set_function<T>& xi) {
    using st = scalar_traits<T>;
    if (!st::eq(xi[0], st::zero(), st::monotonicity_tolerance()))
        throw std::invalid_argument("monotonic_cover: input must vanish on the empty set");
    set_function<T> out = xi;
    for (mask_t m = 1; m <= xi.full(); ++m)
        for (mask_t rest = m; rest != 0; rest &= rest - 1) {
            const mask_t prev = m ^ (rest & -rest);  // m minus one element
            if (out[prev] > out[m])
                out[m] = out[prev];
        }
    return out;
}

inline void require_permutation(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("permutation: expected exactly n entries");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation: entries must be a bijection of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

/// Relabels elements: sigma maps i to sigma[i-1], and the result at B is
/// the input at the preimage of B.
template <class T>
set_function<T> permute(const set_function<T>& xi, const std::vector<int>& sigma) {
    const int n = xi.n();
    require_permutation(sigma, n);
    std::vector<int> inverse(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)])] = i;
    set_function<T> out(xi.ground());
    for (mask_t b = 0; b <= xi.full(); ++b) {
        mask_t pre = 0;
        for (mask_t rest = b; rest != 0; rest &= rest - 1)
            pre |= element_bit(inverse[static_cast<std::size_t>(std::countr_zero(rest) + 1)]);
        out[b] = xi[pre];
    }
    return out;
}

/// Average of xi over all relabelings, computed levelwise: the result at B
/// is the mean of xi over subsets of cardinality |B|. Costs O(2^n) rather
/// than a factorial sweep.
template <class T>
set_function<T> symmetric_part(const set_function<T>& xi) {
    using st = scalar_traits<T>;
    const int n = xi.n();
    std::vector<T> level_sum(static_cast<std::size_t>(n) + 1, st::zero());
    for (mask_t m = 0; m <= xi.full(); ++m)
        level_sum[static_cast<std::size_t>(popcount(m))] += xi[m];
    std::vector<T> level_mean(level_sum.size());
    for (int c = 0; c <= n; ++c)
        level_mean[static_cast<std::size_t>(c)] =
            level_sum[static_cast<std::size_t>(c)] * st::ratio(1, binomial(n, c));
    set_function<T> out(xi.ground());
    for (mask_t m = 0; m <= xi.full(); ++m)
        out[m] = level_mean[static_cast<std::size_t>(popcount(m))];
    return out;
}

/// Mixed difference of xi with respect to K at A:
///   sum over L ⊆ K of (-1)^{|K\L|} xi(A ∪ L).
/// Requires A and K disjoint.
template <class T>
T derivative(const set_function<T>& xi, mask_t k, mask_t a) {
    using st = scalar_traits<T>;
    xi.ground().require_mask(k | a);
    if ((k & a) != 0)
        throw std::invalid_argument("derivative: the difference set must be disjoint from the base set");
    const int ksize = popcount(k);
    T sum = st::zero();
    for_each_subset(k, [&](mask_t l) {
        if ((ksize - popcount(l)) % 2 == 0)
            sum += xi[a | l];
        else
            sum -= xi[a | l];
    });
    return sum;
}

/// Möbius coefficient of xi at A obtained as the full mixed difference at
/// the empty set; agrees with the Möbius transform entrywise.
template <class T>
T mobius_via_derivative(const set_function<T>& xi, mask_t a) {
    return derivative(xi, a, 0);
}

}  // namespace capax
