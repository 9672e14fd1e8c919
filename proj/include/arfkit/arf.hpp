#pragma once

/**
 * @file arf.hpp
 * @brief Arf property, Arf closure, the Lipman tower and multiplicity sequences.
 *
 * Two independent Arf tests are provided:
 *  - stability: every integrally closed ideal {s in S : s >= a} is stable;
 *  - pattern:   b + c - a lies in S whenever a <= b and a <= c are in S.
 * They must always agree; the test suites check this exhaustively.
 */

#include "error.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"
#include "value_set.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace arfkit {

struct ArfWitness {
    enum class Kind { pattern_triple, unstable_ideal };

    Kind kind = Kind::pattern_triple;
    int x = 0; // pattern_triple: x >= y >= z with x + y - z not in S
    int y = 0;
    int z = 0;
    int a = 0; // unstable_ideal: min value of a non-stable closed ideal

    static ArfWitness triple(int x, int y, int z) { return {Kind::pattern_triple, x, y, z, 0}; }
    static ArfWitness unstable(int a) { return {Kind::unstable_ideal, 0, 0, 0, a}; }

    /// Re-checks the certificate against S.
    bool refutes(const NumericalSemigroup& s) const {
        if (kind == Kind::pattern_triple) {
            return s.contains(x) && s.contains(y) && s.contains(z) && z <= y && y <= x &&
                   !s.contains(static_cast<long long>(x) + y - z);
        }
        return s.contains(a) && !is_stable(principal_closure(s, a));
    }

    std::string describe() const {
        if (kind == Kind::pattern_triple) {
            return "witness x=" + std::to_string(x) + " y=" + std::to_string(y) +
                   " z=" + std::to_string(z) + ", x+y−z=" + std::to_string(x + y - z) + " ∉ S";
        }
        return "witness a=" + std::to_string(a) + ": the integral closure of t^" +
               std::to_string(a) + "R is not stable";
    }

    friend bool operator==(const ArfWitness&, const ArfWitness&) = default;
};

struct ArfCheck {
    bool holds = true;
    std::optional<ArfWitness> witness;

    explicit operator bool() const noexcept { return holds; }
};

class not_arf_error : public error {
public:
    not_arf_error(const NumericalSemigroup& s, ArfWitness w)
        : error(errc::not_arf, s.to_string() + " is not Arf; " + w.describe()), witness_(w) {}

    const ArfWitness& witness() const noexcept { return witness_; }

private:
    ArfWitness witness_;
};

/**
 * Stability criterion. For a >= conductor the closed ideal is {a, a+1, ...},
 * a shifted copy of N and always stable, so scanning a <= conductor is
 * complete. Reports the least failing a.
 */
inline ArfCheck is_arf_stability(const NumericalSemigroup& s) {
    for (int a : s.small_elements()) {
        if (!is_stable(principal_closure(s, a))) return {false, ArfWitness::unstable(a)};
    }
    return {};
}

/**
 * Pattern criterion over triples z <= y <= x of elements of S.
 *
 * b + c - a >= max(b, c) whenever a <= b, c, so only b, c below the conductor
 * can violate the pattern; the scan over small elements is complete. The
 * witness is the first violation in (z, y, x) lexicographic order.
 */
inline ArfCheck is_arf_pattern(const NumericalSemigroup& s) {
    const auto& e = s.small_elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i; j < e.size(); ++j) {
            for (std::size_t k = j; k < e.size(); ++k) {
                if (!s.contains(e[k] + e[j] - e[i])) {
                    return {false, ArfWitness::triple(e[k], e[j], e[i])};
                }
            }
        }
    }
    return {};
}

inline bool is_arf(const NumericalSemigroup& s) { return is_arf_stability(s).holds; }

inline void require_arf(const NumericalSemigroup& s) {
    if (auto check = is_arf_stability(s); !check) throw not_arf_error(s, *check.witness);
}

/// v = e for k[[S]], i.e. the maximal ideal is stable.
inline bool has_minimal_multiplicity(const NumericalSemigroup& s) {
    return is_stable(maximal_ideal(s));
}

/// Closure under addition of a set that contains 0 and is cofinite in N.
inline NumericalSemigroup additive_closure(const ValueSet& seed) {
    if (seed.min() != 0) throw error(errc::invalid_argument, "seed set must have least element 0");
    std::vector<char> in(static_cast<std::size_t>(seed.threshold()), 0);
    std::vector<int> members;
    for (int n = 0; n < seed.threshold(); ++n) {
        bool hit = seed.contains(n);
        for (std::size_t i = 1; !hit && i < members.size() && members[i] <= n / 2; ++i) {
            hit = in[static_cast<std::size_t>(n - members[i])] != 0;
        }
        if (hit) {
            in[static_cast<std::size_t>(n)] = 1;
            members.push_back(n);
        }
    }
    return NumericalSemigroup::from_value_set(ValueSet::from_indicator(
        0, seed.threshold(), [&](int n) { return in[static_cast<std::size_t>(n)] != 0; }));
}

/// (S \ {0}) - e(S), before any re-closing under addition.
inline ValueSet blowup_shift(const NumericalSemigroup& s) {
    return s.maximal_ideal_values().shifted(-s.multiplicity());
}

/// The semigroup generated by (S \ {0}) - e(S).
inline NumericalSemigroup blowup(const NumericalSemigroup& s) {
    return additive_closure(blowup_shift(s));
}

/**
 * The semigroup {0, e0, e0+e1, ...} followed by the tail of 1s.
 * Throws errc::invalid_sequence naming the first partial sum p for which some
 * p + p' (p' <= p) is not a partial sum.
 */
inline NumericalSemigroup from_multiplicity_sequence(std::span<const int> entries) {
    std::vector<int> sums{0};
    for (int e : entries) {
        if (e < 1) {
            throw error(errc::invalid_argument,
                        "multiplicity entries must be positive, got " + std::to_string(e));
        }
        sums.push_back(sums.back() + e);
    }
    const int top = sums.back();
    ValueSet set = ValueSet::from_indicator(0, top, [&](int n) {
        return std::binary_search(sums.begin(), sums.end(), n);
    });
    for (std::size_t i = 1; i < sums.size(); ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
            if (!set.contains(sums[i] + sums[j])) {
                throw error(errc::invalid_sequence,
                            "partial sum " + std::to_string(sums[i]) +
                                " breaks closure under addition");
            }
        }
    }
    return NumericalSemigroup::from_value_set(std::move(set));
}

inline NumericalSemigroup from_multiplicity_sequence(std::initializer_list<int> entries) {
    return from_multiplicity_sequence(std::span<const int>(entries.begin(), entries.size()));
}

/// Multiplicities of an Arf semigroup along its Lipman tower, 1-tail trimmed.
class MultiplicitySequence {
public:
    MultiplicitySequence() = default;

    /// Trims trailing 1s, then validates closure and the Arf property.
    static MultiplicitySequence make(std::vector<int> entries) {
        while (!entries.empty() && entries.back() == 1) entries.pop_back();
        NumericalSemigroup s = from_multiplicity_sequence(entries);
        if (auto check = is_arf_pattern(s); !check) {
            throw error(errc::invalid_sequence,
                        "partial-sum semigroup is not Arf; " + check.witness->describe());
        }
        MultiplicitySequence out;
        out.entries_ = std::move(entries);
        return out;
    }

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// e_i, with the implicit tail of 1s.
    int operator[](std::size_t i) const noexcept { return i < entries_.size() ? entries_[i] : 1; }

    NumericalSemigroup semigroup() const { return from_multiplicity_sequence(entries_); }

    friend bool operator==(const MultiplicitySequence&, const MultiplicitySequence&) = default;

private:
    std::vector<int> entries_;
};

struct LipmanTower {
    std::vector<NumericalSemigroup> rings; // A_0 = S, ..., A_N = N
    MultiplicitySequence sequence;         // e(A_0), ..., e(A_{N-1})

    std::size_t length() const noexcept { return rings.size() - 1; }

    /// A_i, which is N for every i >= N.
    const NumericalSemigroup& ring(std::size_t i) const { return rings[std::min(i, length())]; }
};

/**
 * A_0 = S, A_{i+1} = m_i : m_i, until A_N = N. Requires S Arf; for Arf S the
 * blow-up (A_i \ {0}) - e(A_i) is already a semigroup and equals R^{m_i}.
 */
inline LipmanTower lipman_tower(const NumericalSemigroup& s) {
    require_arf(s);
    LipmanTower tower;
    tower.rings.push_back(s);
    std::vector<int> entries;
    while (!tower.rings.back().is_dvr()) {
        const NumericalSemigroup& a = tower.rings.back();
        const IntegrallyClosedIdeal m = maximal_ideal(a);
        NumericalSemigroup next = endo_ring(m);
        ARFKIT_ENSURE(next.values() == blowup_shift(a),
                      "blow-up of an Arf semigroup needed re-closing: " + a.to_string());
        ARFKIT_ENSURE(next == ring_RI(m), "m:m differs from R^m for " + a.to_string());
        entries.push_back(a.multiplicity());
        tower.rings.push_back(std::move(next));
    }
    tower.sequence = MultiplicitySequence::make(std::move(entries));
    return tower;
}

/**
 * Smallest Arf semigroup containing S: the partial sums of the multiplicities
 * along S_0 = S, S_{i+1} = semigroup generated by (S_i \ {0}) - e(S_i).
 */
inline NumericalSemigroup arf_closure(const NumericalSemigroup& s) {
    std::vector<int> entries;
    NumericalSemigroup cur = s;
    while (!cur.is_dvr()) {
        entries.push_back(cur.multiplicity());
        cur = blowup(cur);
    }
    return from_multiplicity_sequence(entries);
}

/**
 * Every Arf semigroup with conductor <= max_conductor, as multiplicity
 * sequences ordered by (conductor, entries). Built by prepending an entry to
 * shorter valid sequences; each candidate is validated by construction.
 */
inline std::vector<MultiplicitySequence> arf_sequences(int max_conductor) {
    std::vector<std::vector<int>> frontier{{}};
    std::vector<MultiplicitySequence> out{MultiplicitySequence{}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& tail : frontier) {
            int total = 0;
            for (int e : tail) total += e;
            for (int e = 2; e + total <= max_conductor; ++e) {
                std::vector<int> cand{e};
                cand.insert(cand.end(), tail.begin(), tail.end());
                // blow-ups of Arf semigroups are Arf, so only valid tails are extended
                try {
                    out.push_back(MultiplicitySequence::make(cand));
                } catch (const error&) {
                    continue;
                }
                next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        int sl = 0, sr = 0;
        for (int e : l.entries()) sl += e;
        for (int e : r.entries()) sr += e;
        return sl != sr ? sl < sr : l.entries() < r.entries();
    });
    return out;
}

inline std::vector<NumericalSemigroup> arf_semigroups(int max_conductor) {
    std::vector<NumericalSemigroup> out;
    for (const auto& seq : arf_sequences(max_conductor)) out.push_back(seq.semigroup());
    return out;
}

} // namespace arfkit
