#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capax/bernoulli.hpp"
#include "capax/bounds.hpp"
#include "capax/capacity.hpp"
#include "capax/combinatorics.hpp"
#include "capax/set_function.hpp"
#include "capax/transforms.hpp"

namespace capax {

/// Largest ground set for which exhaustive vertex enumeration is offered.
/// The count grows as the Dedekind numbers; beyond six elements it is far
/// outside any reasonable runtime.
inline constexpr int max_enumeration_n = 6;

namespace detail {

inline void require_enumerable(int n) {
    if (n < 1 || n > max_enumeration_n)
        throw std::invalid_argument(
            "vertex enumeration: the ground set must have 1.."
            + std::to_string(max_enumeration_n) + " elements");
}

}  // namespace detail

/// Visits every {0,1}-valued normalized capacity on n elements exactly once
/// and returns how many there were. The callback receives the value table
/// indexed by subset mask (values[0] = 0, values[full] = 1).
///
/// Masks are filled in a fixed order (cardinality, then numeric); a mask may
/// take the value 0 only when all its one-element-smaller subsets already
/// did, which prunes the search to exactly the monotone assignments. The
/// visit order is deterministic.
template <class Visit>
std::uint64_t for_each_vertex(int n, Visit&& visit) {
    detail::require_enumerable(n);
    const mask_t full = mask_t((1u << n) - 1u);
    std::vector<mask_t> order;
    order.reserve(std::size_t(full) + 1);
    for (mask_t m = 0; m <= full; ++m)
        order.push_back(m);
    std::sort(order.begin(), order.end(), [](mask_t a, mask_t b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });

    std::vector<std::uint8_t> values(std::size_t(full) + 1, 0);
    std::uint64_t count = 0;

    // Depth-first over the levelled order. Position 0 is the empty set
    // (pinned to 0) and the last position is the full set (pinned to 1).
    const auto assign = [&](std::size_t pos, const auto& self) -> void {
        if (pos + 1 == order.size()) {
            values[full] = 1;
            ++count;
            visit(static_cast<const std::vector<std::uint8_t>&>(values));
            return;
        }
        const mask_t m = order[pos];
        if (m == 0) {
            values[0] = 0;
            self(pos + 1, self);
            return;
        }
        bool zero_allowed = true;
        for (mask_t rest = m; rest; rest &= rest - 1)
            if (values[m ^ (rest & -rest)] != 0) {
                zero_allowed = false;
                break;
            }
        if (zero_allowed) {
            values[m] = 0;
            self(pos + 1, self);
        }
        values[m] = 1;
        self(pos + 1, self);
    };
    assign(0, assign);
    return count;
}

/// Number of {0,1}-valued normalized capacities on n elements
/// (the Dedekind number of n minus the two constant functions).
inline std::uint64_t vertex_count(int n) {
    detail::require_enumerable(n);
    return for_each_vertex(n, [](const std::vector<std::uint8_t>&) {});
}

enum class transform_kind { mobius, interaction, banzhaf };

inline const char* to_string(transform_kind kind) {
    switch (kind) {
        case transform_kind::mobius: return "mobius";
        case transform_kind::interaction: return "interaction";
        case transform_kind::banzhaf: return "banzhaf";
    }
    throw std::logic_error("transform_kind: unknown value");
}

/// Outcome of extremizing one transform coefficient over every vertex.
struct extreme_report {
    transform_kind kind;
    mask_t target;
    int n;
    rational max_value;
    rational min_value;
    set_function<rational> max_witness;
    set_function<rational> min_witness;
    std::uint64_t vertices;
};

/// Exhaustively maximizes and minimizes the coefficient at `target` of the
/// chosen transform over all {0,1}-valued normalized capacities.
///
/// Per vertex the work is integral: the coefficient is a weighted sum over
/// levels of Möbius-style alternating counts, so each candidate reduces to
/// summing 64-bit integers grouped by |B| and applying one rational weight
/// per level at the end.
inline extreme_report extremize(transform_kind kind, mask_t target, ground_set ground) {
    detail::require_enumerable(ground.n());
    ground.require_mask(target);
    if (target == 0)
        throw std::invalid_argument("extremize: the target set must be nonempty");
    const int n = ground.n();
    const mask_t full = ground.full();
    const int tsize = popcount(target);

    // Coefficient at `target` as a level-weighted sum of the Möbius
    // coefficients on supersets:
    //   mobius       weight(b) = 1 only at b = tsize
    //   interaction  weight(b) = 1 / (b - tsize + 1)
    //   banzhaf      weight(b) = 1 / 2^(b - tsize)
    std::vector<rational> level_weight(std::size_t(n) + 1, rational(0));
    for (int b = tsize; b <= n; ++b) {
        switch (kind) {
            case transform_kind::mobius:
                level_weight[std::size_t(b)] = rational(b == tsize ? 1 : 0);
                break;
            case transform_kind::interaction:
                level_weight[std::size_t(b)] = rational(1, b - tsize + 1);
                break;
            case transform_kind::banzhaf:
                level_weight[std::size_t(b)] = rational(1, std::int64_t(1) << (b - tsize));
                break;
        }
    }

    // Enumerate once and fold each vertex's per-level integer sums
    //   level_sum[b] = sum over B ⊇ target, |B| = b of m(B)
    // where m(B) = sum over D ⊆ B of (-1)^{|B \ D|} v(D). Precompute, per
    // superset B of target, its level and signed subset list.
    struct term {
        mask_t set;
        int level;
        std::vector<std::pair<mask_t, int>> signed_subsets;
    };
    std::vector<term> terms;
    for_each_superset(target, full, [&](mask_t b) {
        term t;
        t.set = b;
        t.level = popcount(b);
        for_each_subset(b, [&](mask_t d) {
            t.signed_subsets.emplace_back(d, (popcount(b ^ d) % 2 == 0) ? 1 : -1);
        });
        terms.push_back(std::move(t));
    });

    bool first = true;
    extreme_report report{kind, target, n, rational(0), rational(0),
                          set_function<rational>(ground), set_function<rational>(ground), 0};
    std::vector<std::int64_t> level_sum(std::size_t(n) + 1, 0);

    report.vertices = for_each_vertex(n, [&](const std::vector<std::uint8_t>& values) {
        std::fill(level_sum.begin(), level_sum.end(), 0);
        for (const term& t : terms) {
            std::int64_t m = 0;
            for (const auto& [d, sign] : t.signed_subsets)
                m += sign * std::int64_t(values[d]);
            level_sum[std::size_t(t.level)] += m;
        }
        rational value(0);
        for (int b = tsize; b <= n; ++b)
            value += level_weight[std::size_t(b)] * rational(level_sum[std::size_t(b)]);

        const auto capture = [&](set_function<rational>& witness) {
            for (mask_t m = 0; m <= full; ++m)
                witness[m] = rational(values[m]);
        };
        if (first || value > report.max_value) {
            report.max_value = value;
            capture(report.max_witness);
        }
        if (first || value < report.min_value) {
            report.min_value = value;
            capture(report.min_witness);
        }
        first = false;
    });
    return report;
}

/// Cross-checks the derivative characterization of the upper bound at A:
/// for every B ⊆ N\A the maximum of the A-derivative at B over all
/// vertices is the same, equals the upper Möbius bound for |A|, and is
/// attained simultaneously for all B by the extremal capacity for A.
/// Exhaustive, so restricted to small ground sets.
inline bool check_derivative_maxima(mask_t a, ground_set ground) {
    if (ground.n() > 5)
        throw std::invalid_argument(
            "check_derivative_maxima: exhaustive check is limited to n <= 5");
    ground.require_mask(a);
    if (a == 0)
        throw std::invalid_argument("check_derivative_maxima: the set must be nonempty");
    const mask_t outside = ground.full() & ~a;
    const rational bound(mobius_bounds(popcount(a), ground.n()).upper);

    std::vector<mask_t> contexts;
    for_each_subset(outside, [&](mask_t c) { contexts.push_back(c); });

    std::vector<std::int64_t> best(contexts.size(),
                                   std::numeric_limits<std::int64_t>::min());
    for_each_vertex(ground.n(), [&](const std::vector<std::uint8_t>& values) {
        for (std::size_t i = 0; i < contexts.size(); ++i) {
            std::int64_t d = 0;
            for_each_subset(a, [&](mask_t k) {
                const int sign = (popcount(a ^ k) % 2 == 0) ? 1 : -1;
                d += sign * std::int64_t(values[contexts[i] | k]);
            });
            best[i] = std::max(best[i], d);
        }
    });
    for (const std::int64_t b : best)
        if (rational(b) != bound)
            return false;

    // The extremal capacity must reach that common maximum in every context.
    const set_function<rational> star = extremal_upper(a, ground);
    for (const mask_t c : contexts)
        if (derivative(star, a, c) != bound)
            return false;
    return true;
}

/// Reference transforms written as the defining sums, with no shared code
/// with the fast implementations. Deliberately slow; capped at n <= 12 so
/// the literal factorial weights stay inside 64-bit integers.
enum class naive_kind {
    zeta,
    mobius,
    interaction_by_derivatives,
    interaction_by_mobius,
    banzhaf_by_derivatives,
    banzhaf_by_mobius,
    inverse_interaction,
};

template <class T>
set_function<T> naive_transform(naive_kind kind, const set_function<T>& xi) {
    using st = scalar_traits<T>;
    const int n = xi.n();
    if (n > 12)
        throw std::invalid_argument("naive_transform: reference sums are limited to n <= 12");
    const mask_t full = xi.full();
    const auto factorial = [](int k) {
        std::int64_t f = 1;
        for (int i = 2; i <= k; ++i)
            f *= i;
        return f;
    };

    set_function<T> out(xi.ground());
    switch (kind) {
        case naive_kind::zeta:
            for (mask_t a = 0; a <= full; ++a) {
                T sum = st::zero();
                for (mask_t b = 0; b <= full; ++b)
                    if ((b & a) == b)
                        sum += xi[b];
                out[a] = sum;
            }
            return out;

        case naive_kind::mobius:
            for (mask_t a = 0; a <= full; ++a) {
                T sum = st::zero();
                for (mask_t b = 0; b <= full; ++b)
                    if ((b & a) == b) {
                        const int sign = (popcount(a ^ b) % 2 == 0) ? 1 : -1;
                        sum += st::from_int(sign) * xi[b];
                    }
                out[a] = sum;
            }
            return out;

        case naive_kind::interaction_by_derivatives:
            for (mask_t a = 0; a <= full; ++a) {
                const int asize = popcount(a);
                T sum = st::zero();
                for (mask_t b = 0; b <= full; ++b) {
                    if ((b & a) != 0)
                        continue;
                    const int bsize = popcount(b);
                    const T weight =
                        st::ratio(factorial(n - bsize - asize) * factorial(bsize),
                                  factorial(n - asize + 1));
                    T delta = st::zero();
                    for (mask_t k = 0; k <= full; ++k)
                        if ((k & a) == k) {
                            const int sign = (popcount(a ^ k) % 2 == 0) ? 1 : -1;
                            delta += st::from_int(sign) * xi[b | k];
                        }
                    sum += weight * delta;
                }
                out[a] = sum;
            }
            return out;

        case naive_kind::interaction_by_mobius: {
            const set_function<T> m = naive_transform(naive_kind::mobius, xi);
            for (mask_t a = 0; a <= full; ++a) {
                T sum = st::zero();
                for (mask_t b = 0; b <= full; ++b)
                    if ((b & a) == a)
                        sum += st::ratio(1, popcount(b) - popcount(a) + 1) * m[b];
                out[a] = sum;
            }
            return out;
        }

        case naive_kind::banzhaf_by_derivatives:
            for (mask_t a = 0; a <= full; ++a) {
                const int asize = popcount(a);
                T sum = st::zero();
                for (mask_t b = 0; b <= full; ++b) {
                    if ((b & a) != 0)
                        continue;
                    for (mask_t k = 0; k <= full; ++k)
                        if ((k & a) == k) {
                            const int sign = (popcount(a ^ k) % 2 == 0) ? 1 : -1;
                            sum += st::from_int(sign) * xi[b | k];
                        }
                }
                out[a] = st::ratio(1, std::int64_t(1) << (n - asize)) * sum;
            }
            return out;

        case naive_kind::banzhaf_by_mobius: {
            const set_function<T> m = naive_transform(naive_kind::mobius, xi);
            for (mask_t a = 0; a <= full; ++a) {
                T sum = st::zero();
                for (mask_t b = 0; b <= full; ++b)
                    if ((b & a) == a)
                        sum += st::ratio(1, std::int64_t(1) << (popcount(b) - popcount(a)))
                               * m[b];
                out[a] = sum;
            }
            return out;
        }

        case naive_kind::inverse_interaction: {
            const std::vector<rational> bern = bernoulli_numbers(n);
            for (mask_t a = 0; a <= full; ++a) {
                T sum = st::zero();
                for (mask_t b = 0; b <= full; ++b)
                    if ((b & a) == a)
                        sum += st::from_rational(bern[std::size_t(popcount(b) - popcount(a))])
                               * xi[b];
                out[a] = sum;
            }
            return out;
        }
    }
    throw std::logic_error("naive_transform: unknown kind");
}

}  // namespace capax
