#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "capax/scalar.hpp"
#include "capax/subset.hpp"

namespace capax {

/// A scalar-valued function on 2^N with dense mask-indexed storage.
///
/// The value at subset A lives at index A (the mask itself), so lookups
/// are O(1) and the lattice kernels stream the array linearly. Values are
/// filled at construction time; operations treat their inputs as
/// read-only and return fresh objects, so sharing one instance across
/// threads is safe.
template <class T>
class set_function {
public:
    using scalar_type = T;

    explicit set_function(ground_set ground)
        : ground_(ground), values_(ground.size(), scalar_traits<T>::zero()) {}

    set_function(ground_set ground, std::vector<T> values)
        : ground_(ground), values_(std::move(values)) {
        if (values_.size() != ground_.size())
            throw std::invalid_argument("set_function: expected exactly 2^n values");
    }

    /// {0,1}-valued function from a mask predicate.
    template <class Pred>
    static set_function indicator(ground_set ground, Pred&& pred) {
        set_function out(ground);
        for (mask_t m = 0; m <= ground.full(); ++m)
            if (pred(m))
                out.values_[m] = scalar_traits<T>::one();
        return out;
    }

    const ground_set& ground() const { return ground_; }
    int n() const { return ground_.n(); }
    mask_t full() const { return ground_.full(); }
    std::size_t size() const { return values_.size(); }

    T& operator[](mask_t m) {
        assert(m < values_.size());
        return values_[m];
    }
    const T& operator[](mask_t m) const {
        assert(m < values_.size());
        return values_[m];
    }

    const std::vector<T>& values() const { return values_; }

    friend bool operator==(const set_function& a, const set_function& b) {
        return a.ground_ == b.ground_ && a.values_ == b.values_;
    }
    friend bool operator!=(const set_function& a, const set_function& b) { return !(a == b); }

private:
    ground_set ground_;
    std::vector<T> values_;
};

template <class T>
bool approx_equal(const set_function<T>& a, const set_function<T>& b,
                  T tol = scalar_traits<T>::match_tolerance()) {
    if (a.ground() != b.ground())
        return false;
    for (mask_t m = 0; m <= a.full(); ++m)
        if (!scalar_traits<T>::eq(a[m], b[m], tol))
            return false;
    return true;
}

}  // namespace capax
