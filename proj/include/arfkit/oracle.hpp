#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations on truncated integer sets.
 *
 * Deliberately naive double/triple loops over boolean tables. Nothing here
 * includes or calls the exact layer; the two are compared only from outside
 * (see verify.hpp and the tests).
 *
 * A BoundedSet models a subset X of Z with
 *   - no members below -bound,
 *   - membership tabulated exactly on [-bound, valid_hi],
 *   - every integer above valid_hi a member.
 * Operations derive the valid_hi of their result from those of their inputs,
 * so "exact on [-bound, valid_hi]" is a checked field rather than a hope.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace arfkit::oracle {

class oracle_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoundedSet {
    int bound = 0;
    int valid_hi = 0;
    std::vector<char> members; // index x + bound, x in [-bound, bound]

    static BoundedSet empty(int bound, int valid_hi) {
        if (bound < 1) throw oracle_error("bound must be positive");
        if (valid_hi > bound) {
            throw oracle_error("exact region ends at " + std::to_string(valid_hi) +
                               ", past bound " + std::to_string(bound));
        }
        return {bound, std::max(valid_hi, -bound - 1),
                std::vector<char>(static_cast<std::size_t>(2 * bound + 1), 0)};
    }

    bool contains(int x) const {
        if (x < -bound) return false;
        if (x > valid_hi) return true;
        return members[static_cast<std::size_t>(x + bound)] != 0;
    }

    void set(int x) { members[static_cast<std::size_t>(x + bound)] = 1; }

    /// Least member; every set here is cofinite so one exists.
    int least() const {
        for (int x = -bound; x <= valid_hi; ++x) {
            if (contains(x)) return x;
        }
        return valid_hi + 1;
    }

    std::vector<int> listed() const {
        std::vector<int> out;
        for (int x = -bound; x <= valid_hi; ++x) {
            if (contains(x)) out.push_back(x);
        }
        return out;
    }
};

inline void require_same_bound(const BoundedSet& a, const BoundedSet& b) {
    if (a.bound != b.bound) {
        throw oracle_error("BoundMismatch: " + std::to_string(a.bound) + " vs " +
                           std::to_string(b.bound));
    }
}

/**
 * The numerical semigroup generated by `gens`, by reachability over
 * [0, bound]. Needs gcd 1 and bound >= max*min: the Frobenius number is
 * below max*min, so the last gap found in the window is the last gap, and
 * valid_hi is pulled down to it.
 */
inline BoundedSet semigroup_window(const std::vector<int>& gens, int bound) {
    int g = 0;
    int lo = 1 << 30, hi = 0;
    for (int v : gens) {
        g = std::gcd(g, v);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (gens.empty() || g != 1) throw oracle_error("generators must be coprime");
    if (bound < lo * hi) throw oracle_error("bound below max*min");
    BoundedSet s = BoundedSet::empty(bound, bound);
    s.set(0);
    for (int n = 1; n <= bound; ++n) {
        for (int v : gens) {
            if (n - v >= 0 && s.contains(n - v)) {
                s.set(n);
                break;
            }
        }
    }
    int last_gap = -1;
    for (int n = 0; n <= bound; ++n) {
        if (!s.contains(n)) last_gap = n;
    }
    s.valid_hi = last_gap;
    return s;
}

/// Set given by its members below `conductor` plus everything from there on.
inline BoundedSet from_members(const std::vector<int>& below, int conductor, int bound) {
    if (conductor > bound) throw oracle_error("conductor beyond bound");
    BoundedSet s = BoundedSet::empty(bound, conductor - 1);
    for (int x : below) {
        if (x < -bound || x >= conductor) throw oracle_error("member outside window");
        s.set(x);
    }
    return s;
}

/// {g + s : g in gens, s in S}.
inline BoundedSet ideal_window(const std::vector<int>& gens, const BoundedSet& s) {
    const int gmin = *std::min_element(gens.begin(), gens.end());
    if (gmin < -s.bound) throw oracle_error("generator outside window");
    BoundedSet e = BoundedSet::empty(s.bound, s.valid_hi + gmin);
    for (int z = -s.bound; z <= e.valid_hi; ++z) {
        for (int g : gens) {
            if (s.contains(z - g)) {
                e.set(z);
                break;
            }
        }
    }
    return e;
}

/// {s in S : s >= a}.
inline BoundedSet at_least(const BoundedSet& s, int a) {
    BoundedSet out = BoundedSet::empty(s.bound, std::max(s.valid_hi, a - 1));
    for (int x = std::max(a, -s.bound); x <= out.valid_hi; ++x) {
        if (s.contains(x)) out.set(x);
    }
    return out;
}

/// S + k; members pushed below -bound are an error rather than silently lost.
inline BoundedSet shifted(const BoundedSet& s, int k) {
    if (s.least() + k < -s.bound) throw oracle_error("shift leaves the window");
    BoundedSet out = BoundedSet::empty(s.bound, s.valid_hi + k);
    for (int x = -s.bound; x <= out.valid_hi; ++x) {
        if (s.contains(x - k)) out.set(x);
    }
    return out;
}

/**
 * A + B. Exact up to min(valid_A + min B, valid_B + min A): past that point
 * z - min B (or z - min A) is already in the untabulated tail.
 */
inline BoundedSet sumset(const BoundedSet& a, const BoundedSet& b) {
    require_same_bound(a, b);
    const int amin = a.least(), bmin = b.least();
    BoundedSet out = BoundedSet::empty(a.bound, std::min(a.valid_hi + bmin, b.valid_hi + amin));
    for (int x = -a.bound; x <= a.valid_hi; ++x) {
        if (!a.contains(x)) continue;
        for (int y = -b.bound; y <= b.valid_hi; ++y) {
            if (!b.contains(y)) continue;
            const int z = x + y;
            if (z >= -a.bound && z <= out.valid_hi) out.set(z);
        }
    }
    return out;
}

/**
 * A : B = {z : z + B ⊆ A}. For each candidate z the tabulated part of B is
 * checked pointwise and the tail of B is checked against the table of A;
 * beyond valid_A - min B every z qualifies.
 */
inline BoundedSet colon(const BoundedSet& a, const BoundedSet& b) {
    require_same_bound(a, b);
    const int bmin = b.least();
    if (a.least() - bmin < -a.bound) throw oracle_error("colon reaches below the window");
    BoundedSet out = BoundedSet::empty(a.bound, a.valid_hi - bmin);
    for (int z = -a.bound; z <= out.valid_hi; ++z) {
        bool ok = true;
        for (int y = -b.bound; ok && y <= b.valid_hi; ++y) {
            if (b.contains(y) && !a.contains(z + y)) ok = false;
        }
        for (int w = z + b.valid_hi + 1; ok && w <= a.valid_hi; ++w) {
            if (!a.contains(w)) ok = false;
        }
        if (ok) out.set(z);
    }
    return out;
}

/// Same members on the common tabulated window and the same tail behavior.
inline bool same(const BoundedSet& a, const BoundedSet& b) {
    require_same_bound(a, b);
    const int hi = std::max(a.valid_hi, b.valid_hi);
    for (int x = -a.bound; x <= hi; ++x) {
        if (a.contains(x) != b.contains(x)) return false;
    }
    return true;
}

/**
 * Least superset of S closed under b + c - a for a <= b, a <= c. Elements
 * above valid_hi are all present, and b + c - a >= max(b, c), so only
 * b, c <= valid_hi can add anything new.
 */
inline BoundedSet pattern_saturate(const BoundedSet& s) {
    BoundedSet out = s;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<int> el = out.listed();
        for (int a : el) {
            for (int b : el) {
                if (b < a) continue;
                for (int c : el) {
                    if (c < a) continue;
                    const int v = b + c - a;
                    if (v <= out.valid_hi && !out.contains(v)) {
                        out.set(v);
                        grew = true;
                    }
                }
            }
        }
    }
    return out;
}

/// E + E = min(E) + E.
inline bool stable(const BoundedSet& e) {
    const BoundedSet twice = sumset(e, e);
    const BoundedSet moved = shifted(e, e.least());
    const int hi = std::max(twice.valid_hi, moved.valid_hi);
    for (int x = -e.bound; x <= hi; ++x) {
        if (twice.contains(x) != moved.contains(x)) return false;
    }
    return true;
}

} // namespace arfkit::oracle
