#pragma once

/**
 * @file enumerate.hpp
 * @brief Exhaustive and random generation of numerical semigroups.
 *
 * Uses the semigroup tree: the children of S are S \ {g} for every minimal
 * generator g greater than the Frobenius number of S. Every numerical
 * semigroup other than N has exactly one parent, S ∪ {F(S)}, so a depth-first
 * walk pruned at conductor <= max_conductor visits each semigroup once.
 */

#include "semigroup.hpp"

#include <functional>
#include <random>
#include <vector>

namespace arfkit {

inline std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s,
                                                     int max_conductor) {
    std::vector<NumericalSemigroup> out;
    for (int g : s.minimal_generators()) {
        if (g <= s.frobenius() || g + 1 > max_conductor) continue;
        out.push_back(NumericalSemigroup::from_value_set(ValueSet::from_indicator(
            0, g + 1, [&](int n) { return n != g && s.contains(n); })));
    }
    return out;
}

/// Visits every numerical semigroup with conductor <= max_conductor, N first.
inline void for_each_semigroup(int max_conductor,
                               const std::function<void(const NumericalSemigroup&)>& visit) {
    std::vector<NumericalSemigroup> stack{natural_numbers()};
    while (!stack.empty()) {
        NumericalSemigroup s = std::move(stack.back());
        stack.pop_back();
        visit(s);
        auto kids = tree_children(s, max_conductor);
        // reversed so that the visiting order is deterministic pre-order
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
}

inline std::vector<NumericalSemigroup> all_semigroups(int max_conductor) {
    std::vector<NumericalSemigroup> out;
    for_each_semigroup(max_conductor, [&](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

/**
 * Random numerical semigroup with conductor <= max_conductor: a random walk
 * down the semigroup tree that stops with probability 1/8 at every node.
 */
template <class Rng>
NumericalSemigroup random_semigroup(int max_conductor, Rng& rng) {
    NumericalSemigroup s = natural_numbers();
    std::bernoulli_distribution stop(0.125);
    while (true) {
        auto kids = tree_children(s, max_conductor);
        if (kids.empty() || stop(rng)) return s;
        std::uniform_int_distribution<std::size_t> pick(0, kids.size() - 1);
        s = std::move(kids[pick(rng)]);
    }
}

} // namespace arfkit
