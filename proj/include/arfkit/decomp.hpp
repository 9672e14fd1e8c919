#pragma once

/**
 * @file decomp.hpp
 * @brief Decomposition of integrally closed ideals of an Arf ring k[[S]]
 *        into products of maximal ideals along the blow-up tower.
 *
 * Starting from I_0 = I over R_0 = R, the recursion is
 *
 *     R_{n+1} = √I_n : √I_n,      I_{n+1} = I_n : √I_n,
 *
 * and it stops at the first n with I_n = R_n. With q the last index where
 * I_q is proper, I = m_0 m_1 ... m_q where m_i is the maximal ideal of R_i,
 * and R_{q+1} = I : I.
 *
 * Two routes compute the same result: decompose() runs the colon recursion
 * literally, decompose_fast() reads it off the Lipman tower and the prefix
 * sums of the multiplicity sequence. They must agree structurally.
 */

#include "arf.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"
#include "value_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arfkit {

struct TowerStep {
    int index = 0;
    NumericalSemigroup ring;                     // R_(I,n)
    ValueIdeal ideal;                            // I_n, values E - shift
    std::optional<IntegrallyClosedIdeal> radical; // √I_n, absent once I_n = R_n
    int shift = 0;                               // e_0 + ... + e_{n-1}

    friend bool operator==(const TowerStep&, const TowerStep&) = default;
};

struct DecompositionResult {
    NumericalSemigroup semigroup;
    int a = 0;
    std::vector<TowerStep> steps; // n = 0, ..., q + 1
    int q = -1;                   // -1 encodes I = R
    std::vector<IntegrallyClosedIdeal> factors;
    NumericalSemigroup endpoint_B; // I : I
    bool verified = false;

    friend bool operator==(const DecompositionResult&, const DecompositionResult&) = default;
};

/// Value set of the product of the factors; the empty product is R.
inline ValueSet product_of_factors(const DecompositionResult& r) {
    ValueSet acc = r.semigroup.values();
    for (const auto& f : r.factors) acc = sumset(acc, f.values());
    return acc;
}

namespace detail {

inline void finish(DecompositionResult& r, const IntegrallyClosedIdeal& ideal) {
    r.q = static_cast<int>(r.steps.size()) - 2;
    for (const auto& st : r.steps) {
        if (st.radical) r.factors.push_back(*st.radical);
    }
    r.endpoint_B = r.steps.back().ring;
    r.verified = product_of_factors(r) == ideal.values() && r.endpoint_B == endo_ring(ideal);
}

// q + 1 equals the number of multiplicity entries summing to a, where the
// entries beyond the tower are 1s; each entry > 1 accounts for a gap.
inline int step_limit(const NumericalSemigroup& s, int a) {
    return s.genus() + std::max(0, a - s.conductor()) + 1;
}

} // namespace detail

/// The colon recursion, run literally with the ideal-module operations.
inline DecompositionResult decompose(const NumericalSemigroup& s, int a) {
    const IntegrallyClosedIdeal closed = principal_closure(s, a);
    require_arf(s);
    const ValueSet& e = closed.values();

    DecompositionResult r;
    r.semigroup = s;
    r.a = a;

    NumericalSemigroup ring = s;
    ValueIdeal ideal = closed.ideal();
    int shift = 0;
    const int limit = detail::step_limit(s, a);
    for (int n = 0;; ++n) {
        if (ideal.is_unit()) {
            r.steps.push_back({n, ring, ideal, std::nullopt, shift});
            break;
        }
        ARFKIT_ENSURE(n < limit, "recursion did not terminate for a=" + std::to_string(a) +
                                     " over " + s.to_string());
        IntegrallyClosedIdeal rad = radical(ideal);
        NumericalSemigroup next_ring = endo_ring(rad);
        // I_n : √I_n is an ideal of the blown-up ring, not just of R_n
        ValueIdeal next_ideal(next_ring, colon(ideal, rad).values());
        r.steps.push_back({n, ring, ideal, rad, shift});

        shift += ideal.min() - next_ideal.min();
        ARFKIT_ENSURE(next_ideal.values() == e.shifted(-shift),
                      "I_n is not a shift of I at step " + std::to_string(n + 1));
        ring = std::move(next_ring);
        ideal = std::move(next_ideal);
    }
    detail::finish(r, closed);
    return r;
}

/// Reads the decomposition off the Lipman tower: a = e_0 + ... + e_q.
inline DecompositionResult decompose_fast(const NumericalSemigroup& s, int a) {
    const IntegrallyClosedIdeal closed = principal_closure(s, a);
    const LipmanTower tower = lipman_tower(s);

    std::size_t count = 0;
    int prefix = 0;
    while (prefix < a) prefix += tower.sequence[count++];
    ARFKIT_ENSURE(prefix == a, std::to_string(a) + " is not a prefix sum of the multiplicity "
                                                   "sequence of " + s.to_string());

    DecompositionResult r;
    r.semigroup = s;
    r.a = a;
    int shift = 0;
    for (std::size_t i = 0; i <= count; ++i) {
        const NumericalSemigroup& ring = tower.ring(i);
        ValueIdeal ideal(ring, closed.values().shifted(-shift));
        std::optional<IntegrallyClosedIdeal> rad;
        if (i < count) rad = maximal_ideal(ring);
        r.steps.push_back({static_cast<int>(i), ring, std::move(ideal), std::move(rad), shift});
        shift += tower.sequence[i];
    }
    detail::finish(r, closed);
    return r;
}

/// I = [√I_0 ... √I_n] · I_{n+1} for every 0 <= n <= q.
inline bool partial_products_check(const DecompositionResult& r, const ValueIdeal& e) {
    std::optional<ValueSet> acc;
    for (int n = 0; n <= r.q; ++n) {
        const auto& rad = r.steps[static_cast<std::size_t>(n)].radical;
        if (!rad) return false;
        acc = acc ? sumset(*acc, rad->values()) : rad->values();
        const auto& next = r.steps[static_cast<std::size_t>(n) + 1].ideal;
        if (!(sumset(*acc, next.values()) == e.values())) return false;
    }
    return true;
}

/**
 * The integrally closed ideals that are not ideals of k[[t]]: the closures
 * of t^a R for a in S below the conductor. A closed ideal is a V-ideal iff
 * its values are {a, a+1, ...}, i.e. a >= conductor.
 */
inline std::vector<IntegrallyClosedIdeal> enumerate_non_normal_ideals(const NumericalSemigroup& s) {
    require_arf(s);
    std::vector<IntegrallyClosedIdeal> out;
    for (int a : s.small_elements()) {
        IntegrallyClosedIdeal ideal = principal_closure(s, a);
        ARFKIT_ENSURE(ideal.values().holes() > 0,
                      "closure of t^" + std::to_string(a) + "R is a V-ideal");
        out.push_back(std::move(ideal));
    }
    return out;
}

struct PrincipalityTriple {
    bool ideal_principal;
    bool radical_principal;
    bool ring_is_dvr;
};

/// I = aR, √I = eR and R = V are equivalent for a proper closed ideal.
inline PrincipalityTriple principality_triple(const NumericalSemigroup& s, int a) {
    if (a == 0) throw error(errc::unit_ideal, "a = 0 gives the unit ideal");
    const IntegrallyClosedIdeal ideal = principal_closure(s, a);
    PrincipalityTriple t{
        ideal.values() == s.values().shifted(a),
        maximal_ideal(s).values() == s.values().shifted(s.multiplicity()),
        s.is_dvr(),
    };
    ARFKIT_ENSURE(t.ideal_principal == t.radical_principal && t.radical_principal == t.ring_is_dvr,
                  "principality conditions disagree for a=" + std::to_string(a) + " over " +
                      s.to_string());
    return t;
}

} // namespace arfkit
