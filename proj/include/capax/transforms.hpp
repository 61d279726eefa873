#pragma once

#include <vector>

#include "capax/bernoulli.hpp"
#include "capax/capacity.hpp"
#include "capax/combinatorics.hpp"
#include "capax/set_function.hpp"

namespace capax {

namespace detail {

/// In-place subset-sum sweep: after the sweep, v[A] = sum over B ⊆ A of
/// the original v[B]. One pass per bit, O(n·2^n).
template <class T>
void subset_sum_inplace(std::vector<T>& v, int n) {
    for (int i = 0; i < n; ++i) {
        const mask_t bit = mask_t(1) << i;
        for (mask_t m = 0; m < v.size(); ++m)
            if (m & bit)
                v[m] += v[m ^ bit];
    }
}

/// Inverse of subset_sum_inplace (subtract instead of add).
template <class T>
void subset_sum_invert_inplace(std::vector<T>& v, int n) {
    for (int i = 0; i < n; ++i) {
        const mask_t bit = mask_t(1) << i;
        for (mask_t m = 0; m < v.size(); ++m)
            if (m & bit)
                v[m] -= v[m ^ bit];
    }
}

/// Superset accumulation: after the sweep, v[A] = sum over B ⊇ A of the
/// original v[B]. Each step may scale the lifted term by `weight`, so a
/// weight of 1/2 yields sum over B ⊇ A of v[B] / 2^{|B\A|}.
template <class T>
void superset_sum_inplace(std::vector<T>& v, int n, const T& weight) {
    for (int i = 0; i < n; ++i) {
        const mask_t bit = mask_t(1) << i;
        for (mask_t m = 0; m < v.size(); ++m)
            if (!(m & bit))
                v[m] += v[m | bit] * weight;
    }
}

}  // namespace detail

/// Cumulative-over-subsets transform: xi(A) = sum over B ⊆ A of m(B).
template <class T>
set_function<T> zeta_transform(const set_function<T>& coeffs) {
    std::vector<T> v = coeffs.values();
    detail::subset_sum_inplace(v, coeffs.n());
    return set_function<T>(coeffs.ground(), std::move(v));
}

/// Möbius transform, the inverse of zeta_transform:
///   m(A) = sum over B ⊆ A of (-1)^{|A\B|} xi(B).
/// The round trip is an exact identity in rational mode.
template <class T>
set_function<T> mobius_transform(const set_function<T>& xi) {
    std::vector<T> v = xi.values();
    detail::subset_sum_invert_inplace(v, xi.n());
    return set_function<T>(xi.ground(), std::move(v));
}

/// Weight of the derivative at a context of size b in the interaction
/// transform of a function on n elements at a set of size a:
///   (n-b-a)! b! / (n-a+1)!  ==  1 / ((n-a+1) * C(n-a, b)).
/// The reduced form keeps the exact value inside 64-bit rationals for all
/// supported n; the naive oracle evaluates the factorial form instead.
template <class T>
T interaction_weight(int n, int a, int b) {
    return scalar_traits<T>::ratio(1, (n - a + 1) * binomial(n - a, b));
}

/// Interaction transform through the Möbius representation:
///   I(A) = sum over B ⊇ A of m(B) / (|B| - |A| + 1).
/// Computed levelwise: one superset sweep per cardinality of B, O(n^2·2^n).
template <class T>
set_function<T> interaction_transform(const set_function<T>& xi) {
    using st = scalar_traits<T>;
    const int n = xi.n();
    const set_function<T> m = mobius_transform(xi);
    set_function<T> out(xi.ground());
    std::vector<T> buf(xi.size());
    for (int level = 0; level <= n; ++level) {
        for (mask_t b = 0; b <= xi.full(); ++b)
            buf[b] = popcount(b) == level ? m[b] : st::zero();
        detail::superset_sum_inplace(buf, n, st::one());
        for (mask_t a = 0; a <= xi.full(); ++a) {
            const int asize = popcount(a);
            if (asize > level)
                continue;  // no supersets of a at this level
            out[a] += buf[a] * st::ratio(1, level - asize + 1);
        }
    }
    return out;
}

/// Interaction transform as the weighted average of derivatives:
///   I(A) = sum over B ⊆ N\A of (n-b-a)! b! / (n-a+1)! * Δ_A xi(B).
/// Secondary entry point; must agree with interaction_transform (exactly
/// in rational mode).
template <class T>
set_function<T> interaction_transform_by_derivatives(const set_function<T>& xi) {
    const int n = xi.n();
    set_function<T> out(xi.ground());
    for (mask_t a = 0; a <= xi.full(); ++a) {
        const int asize = popcount(a);
        const mask_t complement = xi.full() & ~a;
        T sum = scalar_traits<T>::zero();
        for_each_subset(complement, [&](mask_t b) {
            sum += interaction_weight<T>(n, asize, popcount(b)) * derivative(xi, a, b);
        });
        out[a] = sum;
    }
    return out;
}

/// Banzhaf interaction transform through the Möbius representation:
///   I_B(A) = sum over B ⊇ A of m(B) / 2^{|B\A|},
/// a single superset sweep with weight 1/2 per lifted element.
template <class T>
set_function<T> banzhaf_transform(const set_function<T>& xi) {
    using st = scalar_traits<T>;
    std::vector<T> v = mobius_transform(xi).values();
    detail::superset_sum_inplace(v, xi.n(), st::ratio(1, 2));
    return set_function<T>(xi.ground(), std::move(v));
}

/// Banzhaf interaction transform as the plain average of derivatives:
///   I_B(A) = 2^{-(n-a)} * sum over B ⊆ N\A of Δ_A xi(B).
/// Secondary entry point; must agree with banzhaf_transform.
template <class T>
set_function<T> banzhaf_transform_by_derivatives(const set_function<T>& xi) {
    const int n = xi.n();
    set_function<T> out(xi.ground());
    for (mask_t a = 0; a <= xi.full(); ++a) {
        const mask_t complement = xi.full() & ~a;
        T sum = scalar_traits<T>::zero();
        for_each_subset(complement, [&](mask_t b) { sum += derivative(xi, a, b); });
        out[a] = sum * scalar_traits<T>::ratio(1, std::int64_t(1) << (n - popcount(a)));
    }
    return out;
}

/// Inverse of the interaction transform, recovering Möbius coefficients:
///   m(A) = sum over B ⊇ A of B_{|B\A|} * I(B),
/// with B_k the Bernoulli numbers (B_1 = -1/2). The Bernoulli index is
/// |B\A| >= 0; some texts print the sign-flipped index in this relation,
/// and the exact round trip with interaction_transform pins the
/// convention used here.
template <class T>
set_function<T> inverse_interaction_transform(const set_function<T>& interaction) {
    using st = scalar_traits<T>;
    const int n = interaction.n();
    const std::vector<rational> bernoulli = bernoulli_numbers(n);
    set_function<T> out(interaction.ground());
    std::vector<T> buf(interaction.size());
    for (int level = 0; level <= n; ++level) {
        for (mask_t b = 0; b <= interaction.full(); ++b)
            buf[b] = popcount(b) == level ? interaction[b] : st::zero();
        detail::superset_sum_inplace(buf, n, st::one());
        for (mask_t a = 0; a <= interaction.full(); ++a) {
            const int asize = popcount(a);
            if (asize > level)
                continue;
            const rational& weight = bernoulli[static_cast<std::size_t>(level - asize)];
            if (weight.is_zero())
                continue;
            out[a] += buf[a] * st::from_rational(weight);
        }
    }
    return out;
}

}  // namespace capax
