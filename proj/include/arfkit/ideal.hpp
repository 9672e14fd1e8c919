#pragma once

/**
 * @file ideal.hpp
 * @brief Monomial (value) ideals of k[[S]] and their arithmetic.
 *
 * A ValueIdeal is a value set E over an ambient semigroup S with E + S ⊆ E.
 * Fractional ideals (negative values, values outside S) are allowed; the
 * operations that only make sense for integral ideals reject them with
 * errc::fractional_input.
 *
 * For a monomial ideal, t^min(E) generates a reduction, and the integral
 * closure is {s in S : s >= min(E)}. Integrally closed ideals are therefore
 * in bijection with the elements of S.
 */

#include "error.hpp"
#include "semigroup.hpp"
#include "value_set.hpp"

#include <span>
#include <string>
#include <vector>

namespace arfkit {

class ValueIdeal {
public:
    /// Throws errc::not_an_ideal unless values + S ⊆ values.
    ValueIdeal(NumericalSemigroup ambient, ValueSet values)
        : ambient_(std::move(ambient)), values_(std::move(values)) {
        if (!sumset(values_, ambient_.values()).is_subset_of(values_)) {
            throw error(errc::not_an_ideal, values_.to_string() + " is not an ideal of " +
                                                ambient_.to_string());
        }
    }

    const NumericalSemigroup& ambient() const noexcept { return ambient_; }
    const ValueSet& values() const noexcept { return values_; }
    int min() const noexcept { return values_.min(); }
    int threshold() const noexcept { return values_.threshold(); }
    bool contains(long long n) const noexcept { return values_.contains(n); }

    bool is_integral() const { return min() >= 0 && values_.is_subset_of(ambient_.values()); }
    bool is_unit() const { return values_ == ambient_.values(); }

    friend bool operator==(const ValueIdeal& a, const ValueIdeal& b) noexcept {
        return a.ambient_ == b.ambient_ && a.values_ == b.values_;
    }

private:
    NumericalSemigroup ambient_;
    ValueSet values_;
};

/// A ValueIdeal certified equal to its integral closure {s in S : s >= a}.
class IntegrallyClosedIdeal {
public:
    const ValueIdeal& ideal() const noexcept { return ideal_; }
    const ValueSet& values() const noexcept { return ideal_.values(); }
    const NumericalSemigroup& ambient() const noexcept { return ideal_.ambient(); }
    int min_value() const noexcept { return ideal_.min(); }

    operator const ValueIdeal&() const noexcept { return ideal_; }

    friend bool operator==(const IntegrallyClosedIdeal& a,
                           const IntegrallyClosedIdeal& b) noexcept {
        return a.ideal_ == b.ideal_;
    }

private:
    explicit IntegrallyClosedIdeal(ValueIdeal ideal) : ideal_(std::move(ideal)) {}
    friend IntegrallyClosedIdeal principal_closure(const NumericalSemigroup&, int);

    ValueIdeal ideal_;
};

/// The integral closure of t^a R: values {s in S : s >= a}.
inline IntegrallyClosedIdeal principal_closure(const NumericalSemigroup& s, int a) {
    if (!s.contains(a)) {
        throw error(errc::not_in_semigroup, std::to_string(a) + " ∉ " + s.to_string());
    }
    return IntegrallyClosedIdeal(ValueIdeal(s, s.values().at_least(a)));
}

/// The unit ideal R.
inline ValueIdeal unit_ideal(const NumericalSemigroup& s) { return ValueIdeal(s, s.values()); }

/// The maximal ideal, values S \ {0}. For N this is {1, 2, ...}.
inline IntegrallyClosedIdeal maximal_ideal(const NumericalSemigroup& s) {
    return principal_closure(s, s.multiplicity());
}

/// The fractional ideal generated by t^g for g in gens: values gens + S.
inline ValueIdeal from_values(const NumericalSemigroup& s, std::span<const int> gens) {
    if (gens.empty()) throw error(errc::invalid_argument, "ideal needs at least one generator");
    std::vector<int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    const int lo = sorted.front();
    return ValueIdeal(s, ValueSet::from_indicator(lo, lo + s.conductor(), [&](int z) {
                          for (int g : sorted) {
                              if (g > z) break;
                              if (s.contains(z - g)) return true;
                          }
                          return false;
                      }));
}

inline ValueIdeal from_values(const NumericalSemigroup& s, std::initializer_list<int> gens) {
    return from_values(s, std::span<const int>(gens.begin(), gens.size()));
}

namespace detail {
inline void require_same_ambient(const ValueIdeal& e, const ValueIdeal& f) {
    if (!(e.ambient() == f.ambient())) {
        throw error(errc::ambient_mismatch, "ideals live over " + e.ambient().to_string() +
                                                " and " + f.ambient().to_string());
    }
}

inline void require_integral(const ValueIdeal& e, const char* op) {
    if (!e.is_integral()) {
        throw error(errc::fractional_input,
                    std::string(op) + " needs an integral ideal, got " + e.values().to_string());
    }
}
} // namespace detail

/// IJ; values E + F.
inline ValueIdeal product(const ValueIdeal& e, const ValueIdeal& f) {
    detail::require_same_ambient(e, f);
    return ValueIdeal(e.ambient(), sumset(e.values(), f.values()));
}

/// I : J; values {z : z + F ⊆ E}.
inline ValueIdeal colon(const ValueIdeal& e, const ValueIdeal& f) {
    detail::require_same_ambient(e, f);
    return ValueIdeal(e.ambient(), colon(e.values(), f.values()));
}

inline IntegrallyClosedIdeal integral_closure(const ValueIdeal& e) {
    detail::require_integral(e, "integral_closure");
    return principal_closure(e.ambient(), e.min());
}

/// In the local one-branch model V(I) = {m}, so √I is m unless I = R.
inline IntegrallyClosedIdeal radical(const ValueIdeal& e) {
    detail::require_integral(e, "radical");
    if (e.min() == 0) return principal_closure(e.ambient(), 0);
    return maximal_ideal(e.ambient());
}

/// I^2 = aI with a = t^min(E), i.e. E + E = min(E) + E.
inline bool is_stable(const ValueIdeal& e) {
    detail::require_integral(e, "is_stable");
    return sumset(e.values(), e.values()) == e.values().shifted(e.min());
}

/// I : I as a semigroup. It always lies in N since z + E ⊆ E forces z >= 0.
inline NumericalSemigroup endo_ring(const ValueIdeal& e) {
    detail::require_integral(e, "endo_ring");
    return NumericalSemigroup::from_value_set(colon(e.values(), e.values()));
}

/// R : I; values {z : z + E ⊆ S}.
inline ValueIdeal dual(const ValueIdeal& e) {
    return ValueIdeal(e.ambient(), colon(e.ambient().values(), e.values()));
}

/**
 * R^I, the union of the rings I^n : I^n.
 *
 * Once (n+1)E = min(E) + nE the element t^min(E) is a reduction with
 * reduction number n, and from then on I^n : I^n no longer grows.
 */
inline NumericalSemigroup ring_RI(const ValueIdeal& e) {
    detail::require_integral(e, "ring_RI");
    ValueSet pw = e.values();
    while (true) {
        ValueSet next = sumset(pw, e.values());
        if (next == pw.shifted(e.min())) break;
        pw = std::move(next);
    }
    return NumericalSemigroup::from_value_set(colon(pw, pw));
}

/**
 * Re-reads a value set as an ideal over another ring, e.g. an ideal of R
 * viewed as an ideal of an overring B. Throws errc::not_an_ideal when the
 * set is not a B-module.
 */
inline ValueIdeal over(const NumericalSemigroup& ring, const ValueSet& values) {
    return ValueIdeal(ring, values);
}

} // namespace arfkit
