#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups, the value semigroups S of the rings k[[S]].
 */

#include "error.hpp"
#include "value_set.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace arfkit {

struct SemigroupStats {
    int multiplicity;
    int conductor;
    int frobenius;
    int genus;
    int embedding_dimension;
    std::vector<int> minimal_generators;
};

class NumericalSemigroup {
public:
    /// The semigroup of the DVR k[[t]].
    NumericalSemigroup() : values_(ValueSet::tail(0)), generators_{1} {}

    /**
     * Smallest submonoid of N containing `gens`.
     *
     * Membership is computed by dynamic programming on [0, max*min + max],
     * which exceeds the Frobenius number of any coprime generator list.
     */
    static NumericalSemigroup from_generators(std::span<const int> gens) {
        if (gens.empty()) throw error(errc::empty_generators, "generator list is empty");
        int g = 0;
        for (int v : gens) {
            if (v < 1) {
                throw error(errc::invalid_argument,
                            "generators must be positive, got " + std::to_string(v));
            }
            g = std::gcd(g, v);
        }
        if (g != 1) {
            throw error(errc::non_coprime,
                        "generators have gcd " + std::to_string(g) + ", semigroup is not cofinite");
        }
        const auto [lo_it, hi_it] = std::minmax_element(gens.begin(), gens.end());
        const std::int64_t window64 =
            static_cast<std::int64_t>(*hi_it) * *lo_it + *hi_it;
        if (window64 > std::int64_t{1} << 30) {
            throw error(errc::bound_exceeded, "membership window too large");
        }
        const int window = static_cast<int>(window64);

        std::vector<char> reach(static_cast<std::size_t>(window) + 1, 0);
        reach[0] = 1;
        for (int n = 1; n <= window; ++n) {
            for (int v : gens) {
                if (v <= n && reach[static_cast<std::size_t>(n - v)]) {
                    reach[static_cast<std::size_t>(n)] = 1;
                    break;
                }
            }
        }
        // reachability sets are closed under addition, no need to re-check
        return adopt(ValueSet::from_indicator(
            0, window + 1, [&](int n) { return reach[static_cast<std::size_t>(n)] != 0; }));
    }

    static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
        return from_generators(std::span<const int>(gens.begin(), gens.size()));
    }

    /**
     * Adopts a value set as a semigroup after checking that it contains 0, has
     * no negative members and is closed under addition.
     */
    static NumericalSemigroup from_value_set(ValueSet values) {
        if (values.min() != 0) {
            throw error(errc::not_a_semigroup,
                        "least element is " + std::to_string(values.min()) + ", expected 0");
        }
        const auto& small = values.small_elements();
        for (std::size_t i = 0; i < small.size(); ++i) {
            for (std::size_t j = i; j < small.size(); ++j) {
                const int s = small[i] + small[j];
                if (s >= values.threshold()) break;
                if (!values.contains(s)) {
                    throw error(errc::not_a_semigroup,
                                "not closed under addition: " + std::to_string(small[i]) + "+" +
                                    std::to_string(small[j]) + " missing");
                }
            }
        }
        return adopt(std::move(values));
    }

    bool contains(long long n) const noexcept { return values_.contains(n); }

    const ValueSet& values() const noexcept { return values_; }
    const std::vector<int>& small_elements() const noexcept { return values_.small_elements(); }
    int conductor() const noexcept { return values_.threshold(); }
    int frobenius() const noexcept { return conductor() - 1; }
    int genus() const noexcept { return values_.holes(); }
    bool is_dvr() const noexcept { return conductor() == 0; }

    int multiplicity() const noexcept {
        const auto& s = small_elements();
        return s.size() > 1 ? s[1] : std::max(conductor(), 1);
    }

    const std::vector<int>& minimal_generators() const noexcept { return generators_; }
    int embedding_dimension() const noexcept { return static_cast<int>(generators_.size()); }

    SemigroupStats stats() const {
        return {multiplicity(), conductor(), frobenius(), genus(), embedding_dimension(),
                generators_};
    }

    /// S \ {0}, the values of the maximal ideal.
    ValueSet maximal_ideal_values() const { return values_.at_least(1); }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
        return a.values_ == b.values_;
    }

    /// Display form, e.g. "⟨3,11,13⟩"; the DVR prints as "⟨1⟩".
    std::string to_string() const {
        std::string out = "⟨";
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(generators_[i]);
        }
        return out + "⟩";
    }

private:
    static NumericalSemigroup adopt(ValueSet values) {
        NumericalSemigroup out;
        out.values_ = std::move(values);
        out.generators_ = out.compute_minimal_generators();
        return out;
    }

    // Every minimal generator other than m lies in the Apéry set of m, and
    // w in it is decomposable iff w - w' is in S for a smaller nonzero w'.
    std::vector<int> compute_minimal_generators() const {
        if (is_dvr()) return {1};
        const int m = multiplicity();
        std::vector<int> apery(static_cast<std::size_t>(m), -1);
        int found = 0;
        for (int n = 0; found < m; ++n) {
            auto& w = apery[static_cast<std::size_t>(n % m)];
            if (w < 0 && contains(n)) {
                w = n;
                ++found;
            }
        }
        std::sort(apery.begin(), apery.end());
        std::vector<int> gens{m};
        for (std::size_t i = 1; i < apery.size(); ++i) {
            bool decomposable = false;
            for (std::size_t j = 1; j < i && !decomposable; ++j) {
                decomposable = contains(apery[i] - apery[j]);
            }
            if (!decomposable) gens.push_back(apery[i]);
        }
        std::sort(gens.begin(), gens.end());
        return gens;
    }

    ValueSet values_;
    std::vector<int> generators_;
};

/// N = k[[t]].
inline NumericalSemigroup natural_numbers() { return NumericalSemigroup{}; }

} // namespace arfkit
