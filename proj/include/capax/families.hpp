#pragma once

#include <algorithm>
#include <vector>

#include "capax/bounds.hpp"
#include "capax/capacity.hpp"
#include "capax/transforms.hpp"

namespace capax {

/// Ordered list of disjoint nonempty blocks covering N.
struct partition {
    std::vector<mask_t> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

inline bool is_valid_partition(const partition& p, const ground_set& ground) {
    mask_t seen = 0;
    for (const mask_t block : p.blocks) {
        if (block == 0 || !ground.contains_mask(block) || (block & seen) != 0)
            return false;
        seen |= block;
    }
    return seen == ground.full();
}

inline void require_partition(const partition& p, const ground_set& ground) {
    if (!is_valid_partition(p, ground))
        throw std::invalid_argument(
            "partition: blocks must be nonempty, disjoint and cover the ground set");
}

/// Sorts blocks by their smallest element; canonical form for comparisons.
inline partition normalized(partition p) {
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](mask_t a, mask_t b) { return (a & -a) < (b & -b); });
    return p;
}

/// True iff every Möbius coefficient above cardinality k vanishes.
template <class T>
bool is_at_most_k_additive(const set_function<T>& mu, int k) {
    using st = scalar_traits<T>;
    if (k < 1 || k > mu.n())
        throw std::invalid_argument("is_at_most_k_additive: k must lie in 1..n");
    const set_function<T> m = mobius_transform(mu);
    for (mask_t a = 0; a <= mu.full(); ++a)
        if (popcount(a) > k && !st::eq(m[a], st::zero(), st::match_tolerance()))
            return false;
    return true;
}

/// Smallest k such that mu is at most k-additive; n when the top Möbius
/// coefficient is nonzero, 1 for additive (and identically zero) inputs.
template <class T>
int minimal_additivity_order(const set_function<T>& mu) {
    using st = scalar_traits<T>;
    const set_function<T> m = mobius_transform(mu);
    int top = 1;
    for (mask_t a = 0; a <= mu.full(); ++a)
        if (popcount(a) > top && !st::eq(m[a], st::zero(), st::match_tolerance()))
            top = popcount(a);
    return top;
}

/// True iff A is a subset of indifference for mu: equal-size proper
/// subcoalitions of A are interchangeable in any context disjoint from A,
///   mu(C ∪ B1) = mu(C ∪ B2) for all B1, B2 ⊂ A with |B1| = |B2|
///   and all C ⊆ N\A.
template <class T>
bool is_subset_of_indifference(const set_function<T>& mu, mask_t a) {
    using st = scalar_traits<T>;
    mu.ground().require_mask(a);
    if (a == 0)
        throw std::invalid_argument("is_subset_of_indifference: the set must be nonempty");
    const mask_t outside = mu.full() & ~a;
    const int asize = popcount(a);
    // Reference subset per size: comparing everything against one
    // representative is equivalent to the pairwise condition.
    std::vector<mask_t> reference(static_cast<std::size_t>(asize), 0);
    for_each_subset(a, [&](mask_t b) {
        const int size = popcount(b);
        if (size < asize && reference[static_cast<std::size_t>(size)] < b)
            reference[static_cast<std::size_t>(size)] = b;
    });
    bool ok = true;
    for_each_subset(a, [&](mask_t b1) {
        if (!ok || popcount(b1) >= asize)
            return;
        const mask_t ref = reference[static_cast<std::size_t>(popcount(b1))];
        for_each_subset(outside, [&](mask_t c) {
            if (ok && !st::eq(mu[c | b1], mu[c | ref], st::match_tolerance()))
                ok = false;
        });
    });
    return ok;
}

namespace detail {

/// Earliest interchangeability violation inside `block`, scanned in a
/// fixed order (subset size, then mask values); returns the smallest
/// element of the symmetric difference of the offending pair, or 0 when
/// the block verifies.
template <class T>
int earliest_indifference_violation(const set_function<T>& mu, mask_t block) {
    using st = scalar_traits<T>;
    const mask_t outside = mu.full() & ~block;
    const int bsize = popcount(block);
    for (int size = 1; size < bsize; ++size) {
        std::vector<mask_t> subs;
        for_each_subset(block, [&](mask_t s) {
            if (popcount(s) == size)
                subs.push_back(s);
        });
        std::sort(subs.begin(), subs.end());
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j) {
                int bad = 0;
                for_each_subset(outside, [&](mask_t c) {
                    if (bad == 0 && !st::eq(mu[c | subs[i]], mu[c | subs[j]],
                                            st::match_tolerance())) {
                        const mask_t diff = subs[i] ^ subs[j];
                        bad = elements(diff).front();
                    }
                });
                if (bad != 0)
                    return bad;
            }
    }
    return 0;
}

}  // namespace detail

/// Coarsest partition of N into subsets of indifference.
///
/// Seeds blocks as connected components of the pairwise relation
/// i ~ j iff {i,j} is a subset of indifference, verifies every component,
/// and on failure peels off the element implicated in the earliest
/// violation until the remainder verifies (singletons always do). When
/// the seeded components verify — whenever pairwise indifference behaves
/// transitively — the result is provably the coarsest such partition.
/// Requires a valid normalized capacity.
template <class T>
partition basis(const set_function<T>& mu) {
    if (!validate_capacity(mu).ok())
        throw std::invalid_argument("basis: input must be a normalized capacity");
    const int n = mu.n();

    // Components of the pairwise relation i ~ j iff {i, j} is a subset of
    // indifference, grown left to right: element j joins the first earlier
    // component containing some i with i ~ j.
    std::vector<mask_t> pending;
    for (int j = 1; j <= n; ++j) {
        mask_t merged = element_bit(j);
        auto keep = pending.begin();
        for (mask_t& block : pending) {
            bool linked = false;
            for (const int i : elements(block))
                if (is_subset_of_indifference(mu, element_bit(i) | element_bit(j))) {
                    linked = true;
                    break;
                }
            if (linked)
                merged |= block;
            else
                *keep++ = block;
        }
        pending.erase(keep, pending.end());
        pending.push_back(merged);
    }

    partition result;
    for (mask_t block : pending) {
        // Verify; split off offenders until the remainder passes.
        while (popcount(block) > 1) {
            const int offender = detail::earliest_indifference_violation(mu, block);
            if (offender == 0)
                break;
            block ^= element_bit(offender);
            result.blocks.push_back(element_bit(offender));
        }
        result.blocks.push_back(block);
    }
    result = normalized(std::move(result));
    require_partition(result, mu.ground());
    for (const mask_t block : result.blocks)
        if (!is_subset_of_indifference(mu, block))
            throw std::logic_error("basis: produced a non-indifferent block");
    return result;
}

/// True iff every block of the partition is a subset of indifference for
/// mu, i.e. mu belongs to the p-symmetric family of that partition.
template <class T>
bool is_p_symmetric_compatible(const set_function<T>& mu, const partition& p) {
    require_partition(p, mu.ground());
    for (const mask_t block : p.blocks)
        if (!is_subset_of_indifference(mu, block))
            return false;
    return true;
}

/// Symmetric capacity attaining the upper Möbius bound at A: value 1 iff
/// |B| >= |A| - l_{|A|}. Depends on |B| only, so it is invariant under
/// every permutation (hence p-symmetric for any indifference partition),
/// agrees with extremal_upper(A) on the sublattice 2^A, and keeps the
/// same Möbius coefficient at A.
template <class T = rational>
set_function<T> symmetric_extremal_upper(mask_t a, ground_set ground) {
    ground.require_mask(a);
    if (a == 0)
        throw std::invalid_argument("symmetric_extremal_upper: the target set must be nonempty");
    const int asize = popcount(a);
    const int threshold = asize - upper_bound_index(asize);
    return set_function<T>::indicator(
        ground, [&](mask_t b) { return popcount(b) >= threshold; });
}

/// Symmetric counterpart of extremal_lower: value 1 iff
/// |B| >= |A| - l'_{|A|} for |A| >= 2; for |A| = 1 the zero lower bound is
/// attained by the symmetric vertex that is 1 only at N.
template <class T = rational>
set_function<T> symmetric_extremal_lower(mask_t a, ground_set ground) {
    ground.require_mask(a);
    if (a == 0)
        throw std::invalid_argument("symmetric_extremal_lower: the target set must be nonempty");
    const int asize = popcount(a);
    if (asize == 1)
        return set_function<T>::indicator(ground,
                                          [&](mask_t b) { return b == ground.full(); });
    const int threshold = asize - lower_bound_index(asize);
    return set_function<T>::indicator(
        ground, [&](mask_t b) { return popcount(b) >= threshold; });
}

}  // namespace capax
