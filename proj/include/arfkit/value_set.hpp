#pragma once

/**
 * @file value_set.hpp
 * @brief Bounded-below, cofinite subsets of the integers.
 *
 * A ValueSet is stored as the finite list of its members below a threshold T
 * together with the implicit tail {T, T+1, ...}. Value sets of monomial
 * fractional ideals of k[[S]] and numerical semigroups themselves are both
 * of this shape, so every arithmetic operation below is exact.
 */

#include "error.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arfkit {

class ValueSet {
public:
    /// {start, start+1, ...}
    static ValueSet tail(int start) {
        ValueSet s;
        s.min_ = start;
        s.threshold_ = start;
        return s;
    }

    /**
     * Builds the set whose members in [lo, hi) are given by `pred` and which
     * contains every integer >= hi. The result is canonical: the threshold is
     * the least T with [T, inf) inside the set.
     */
    template <class Pred>
    static ValueSet from_indicator(int lo, int hi, Pred&& pred) {
        if (hi < lo) hi = lo;
        std::vector<char> bits(static_cast<std::size_t>(hi - lo));
        for (int z = lo; z < hi; ++z) bits[static_cast<std::size_t>(z - lo)] = pred(z) ? 1 : 0;

        int threshold = hi;
        while (threshold > lo && bits[static_cast<std::size_t>(threshold - 1 - lo)]) --threshold;

        ValueSet s;
        s.threshold_ = threshold;
        for (int z = lo; z < threshold; ++z) {
            if (bits[static_cast<std::size_t>(z - lo)]) s.small_.push_back(z);
        }
        s.min_ = s.small_.empty() ? threshold : s.small_.front();
        s.rebuild_mask();
        return s;
    }

    /// Canonical set from explicit members below `threshold` plus the tail.
    static ValueSet from_elements(std::span<const int> below, int threshold) {
        std::vector<int> sorted(below.begin(), below.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (!sorted.empty() && sorted.back() >= threshold) {
            throw error(errc::invalid_argument, "listed element not below threshold");
        }
        const int lo = sorted.empty() ? threshold : sorted.front();
        return from_indicator(lo, threshold, [&](int z) {
            return std::binary_search(sorted.begin(), sorted.end(), z);
        });
    }

    int min() const noexcept { return min_; }
    int threshold() const noexcept { return threshold_; }

    /// Members strictly below the threshold, ascending.
    const std::vector<int>& small_elements() const noexcept { return small_; }

    bool contains(long long n) const noexcept {
        if (n >= threshold_) return true;
        if (n < min_) return false;
        return mask_[static_cast<std::size_t>(n - min_)] != 0;
    }

    /// Number of integers in [min, threshold) that are not members.
    int holes() const noexcept { return threshold_ - min_ - static_cast<int>(small_.size()); }

    ValueSet shifted(int k) const {
        ValueSet s = *this;
        s.min_ += k;
        s.threshold_ += k;
        for (int& v : s.small_) v += k;
        return s;
    }

    /// Intersection with [floor, inf).
    ValueSet at_least(int floor) const {
        if (floor <= min_) return *this;
        if (floor >= threshold_) return tail(floor);
        return from_indicator(floor, threshold_, [&](int z) { return contains(z); });
    }

    bool is_subset_of(const ValueSet& other) const {
        if (threshold_ < other.threshold_) return false;
        return std::all_of(small_.begin(), small_.end(),
                           [&](int v) { return other.contains(v); });
    }

    friend bool operator==(const ValueSet& a, const ValueSet& b) noexcept {
        return a.threshold_ == b.threshold_ && a.small_ == b.small_;
    }

    std::string to_string() const {
        std::string out = "{";
        for (int v : small_) out += std::to_string(v) + ",";
        out += std::to_string(threshold_) + ",...}";
        return out;
    }

private:
    void rebuild_mask() {
        mask_.assign(static_cast<std::size_t>(threshold_ - min_), 0);
        for (int v : small_) mask_[static_cast<std::size_t>(v - min_)] = 1;
    }

    int min_ = 0;
    int threshold_ = 0;
    std::vector<int> small_;
    std::vector<char> mask_;
};

/**
 * Minkowski sum A + B.
 *
 * Every z >= min(T_A + min B, T_B + min A) is a member, and below that bound
 * any decomposition z = x + y must use an x below T_A, so scanning the
 * small elements of A is exhaustive.
 */
inline ValueSet sumset(const ValueSet& a, const ValueSet& b) {
    const int lo = a.min() + b.min();
    const int hi = std::min(a.threshold() + b.min(), b.threshold() + a.min());
    const auto& xs = a.small_elements();
    return ValueSet::from_indicator(lo, hi, [&](int z) {
        for (int x : xs) {
            if (x > z - b.min()) break;
            if (b.contains(z - x)) return true;
        }
        return false;
    });
}

/**
 * The colon set A : B = {z : z + B is contained in A}.
 *
 * For z >= T_A - min B all of z + B lies in the tail of A. Below that, z is a
 * member iff z + b is in A for every small element b of B and the tail of B
 * lands in the tail of A, i.e. z + T_B >= T_A (T_A - 1 is never in A).
 */
inline ValueSet colon(const ValueSet& a, const ValueSet& b) {
    const int lo = a.min() - b.min();
    const int hi = a.threshold() - b.min();
    const auto& bs = b.small_elements();
    return ValueSet::from_indicator(lo, hi, [&](int z) {
        if (z + b.threshold() < a.threshold()) return false;
        return std::all_of(bs.begin(), bs.end(), [&](int y) { return a.contains(z + y); });
    });
}

/// n-fold sumset of `a` with itself; n >= 1.
inline ValueSet power(const ValueSet& a, int n) {
    if (n < 1) throw error(errc::invalid_argument, "power exponent must be positive");
    ValueSet out = a;
    for (int i = 1; i < n; ++i) out = sumset(out, a);
    return out;
}

} // namespace arfkit
