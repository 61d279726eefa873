#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace capax {

/// A subset of the ground set N = {1,...,n}, encoded as an n-bit mask.
/// Element i occupies bit i-1, so the dense array index of a subset is
/// the mask value itself.
using mask_t = std::uint32_t;

inline int popcount(mask_t m) { return std::popcount(m); }

inline mask_t element_bit(int element) { return mask_t(1) << (element - 1); }

inline bool contains(mask_t m, int element) { return (m & element_bit(element)) != 0; }

/// Visits every subset of `m`, descending from `m` itself down to the
/// empty set.
template <class F>
void for_each_subset(mask_t m, F&& f) {
    mask_t sub = m;
    while (true) {
        f(sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & m;
    }
}

/// Visits every superset of `m` inside `full`, ascending from `m` to `full`.
template <class F>
void for_each_superset(mask_t m, mask_t full, F&& f) {
    mask_t sup = m;
    while (true) {
        f(sup);
        if (sup == full)
            break;
        sup = (sup + 1) | m;
    }
}

inline std::vector<int> elements(mask_t m) {
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1)
        if (m & 1u)
            out.push_back(i);
    return out;
}

/// Ground set N = {1,...,n}.
///
/// The element count is capped so that dense 2^n storage stays
/// predictable; the default cap of 24 can be overridden through the
/// CAPAX_MAX_N environment variable (absolute limit 30).
class ground_set {
public:
    static constexpr int default_cap = 24;
    static constexpr int absolute_cap = 30;

    explicit ground_set(int n) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("ground_set: n must be at least 1");
        if (n > cap())
            throw std::invalid_argument(
                "ground_set: n = " + std::to_string(n) + " exceeds the dense-storage cap " +
                std::to_string(cap()) + " (override with CAPAX_MAX_N)");
    }

    int n() const { return n_; }
    std::size_t size() const { return std::size_t(1) << n_; }
    mask_t full() const { return (mask_t(1) << n_) - 1; }

    bool contains_mask(mask_t m) const { return (m & ~full()) == 0; }

    void require_mask(mask_t m) const {
        if (!contains_mask(m))
            throw std::invalid_argument("mask " + std::to_string(m) +
                                        " is outside the ground set of size " + std::to_string(n_));
    }

    friend bool operator==(const ground_set& a, const ground_set& b) { return a.n_ == b.n_; }
    friend bool operator!=(const ground_set& a, const ground_set& b) { return a.n_ != b.n_; }

    static int cap() {
        if (const char* env = std::getenv("CAPAX_MAX_N")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || v < 1)
                throw std::runtime_error("CAPAX_MAX_N: expected a positive integer");
            return v > absolute_cap ? absolute_cap : static_cast<int>(v);
        }
        return default_cap;
    }

private:
    int n_;
};

/// Parses a comma-separated list of 1-based element labels ("1,2,3"; ""
/// denotes the empty set). Throws std::invalid_argument on labels outside
/// {1,...,n} or duplicates.
inline mask_t parse_subset(std::string_view text, const ground_set& ground) {
    mask_t out = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        const std::string_view token = text.substr(pos, comma - pos);
        int value = 0;
        bool any = false;
        for (const char c : token) {
            if (c < '0' || c > '9' || value > ground_set::absolute_cap)
                throw std::invalid_argument("subset '" + std::string(text) +
                                            "': bad element label '" + std::string(token) + "'");
            value = value * 10 + (c - '0');
            any = true;
        }
        if (!any || value < 1 || value > ground.n())
            throw std::invalid_argument("subset '" + std::string(text) +
                                        "': element label '" + std::string(token) +
                                        "' is outside 1.." + std::to_string(ground.n()));
        if (contains(out, value))
            throw std::invalid_argument("subset '" + std::string(text) +
                                        "': duplicate element " + std::to_string(value));
        out |= element_bit(value);
        pos = comma + 1;
        if (pos == text.size() && comma != text.size())
            throw std::invalid_argument("subset '" + std::string(text) + "': trailing comma");
    }
    return out;
}

/// Inverse of parse_subset: "1,3" for {1,3}, "" for the empty set.
inline std::string format_subset(mask_t m) {
    std::string out;
    for (const int e : elements(m)) {
        if (!out.empty())
            out += ',';
        out += std::to_string(e);
    }
    return out;
}

}  // namespace capax
