#pragma once

/**
 * @file verify.hpp
 * @brief Property battery: the structural facts about Arf semigroup
 *        rings that the library relies on, checked on concrete semigroups.
 *
 * Each property keeps a tally of cases checked and passed plus the first
 * failing case. Exhaustive runs visit semigroups in (conductor, elements)
 * order, so the first failure recorded is also the smallest one.
 */

#include "arf.hpp"
#include "decomp.hpp"
#include "enumerate.hpp"
#include "ideal.hpp"
#include "oracle.hpp"
#include "semigroup.hpp"
#include "value_set.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace arfkit::verify {

struct Tally {
    std::string name;
    long checked = 0;
    long passed = 0;
    std::optional<std::string> counterexample;

    bool ok() const noexcept { return checked == passed; }
};

class Report {
public:
    void record(const std::string& name, bool ok, const std::function<std::string()>& what) {
        Tally& t = slot(name);
        ++t.checked;
        if (ok) {
            ++t.passed;
        } else if (!t.counterexample) {
            t.counterexample = what();
        }
    }

    /// Runs `body`; an arfkit::error escaping from it counts as a failure.
    void guarded(const std::string& name, const std::function<std::string()>& what,
                 const std::function<bool()>& body) {
        bool ok = false;
        std::string detail;
        try {
            ok = body();
        } catch (const std::exception& e) {
            detail = std::string(" threw: ") + e.what();
        }
        record(name, ok, [&] { return what() + detail; });
    }

    const std::vector<Tally>& tallies() const noexcept { return tallies_; }

    const Tally* find(const std::string& name) const {
        auto it = std::find_if(tallies_.begin(), tallies_.end(),
                               [&](const Tally& t) { return t.name == name; });
        return it == tallies_.end() ? nullptr : &*it;
    }

    bool ok() const {
        return std::all_of(tallies_.begin(), tallies_.end(), [](const Tally& t) { return t.ok(); });
    }

    long failures() const {
        long n = 0;
        for (const auto& t : tallies_) n += t.checked - t.passed;
        return n;
    }

private:
    Tally& slot(const std::string& name) {
        for (auto& t : tallies_) {
            if (t.name == name) return t;
        }
        tallies_.push_back(Tally{name, 0, 0, std::nullopt});
        return tallies_.back();
    }

    std::vector<Tally> tallies_;
};

inline std::string describe(const NumericalSemigroup& s) { return "S=" + s.to_string(); }

inline std::string describe(const NumericalSemigroup& s, int a) {
    return describe(s) + " a=" + std::to_string(a);
}

/// Closed ideals probed by the ideal sweeps: a in S with a <= conductor + multiplicity.
inline std::vector<int> probe_values(const NumericalSemigroup& s) {
    std::vector<int> out;
    for (int a = 0; a <= s.conductor() + s.multiplicity(); ++a) {
        if (s.contains(a)) out.push_back(a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// semigroup

inline void check_semigroup(const NumericalSemigroup& s, Report& rep) {
    rep.guarded("semigroup.roundtrip", [&] { return describe(s); }, [&] {
        const auto& g = s.minimal_generators();
        NumericalSemigroup again = NumericalSemigroup::from_generators(g);
        const bool closed_pairs = [&] {
            const int top = s.conductor() + g.back();
            for (int x = 0; x <= top; ++x) {
                for (int y = x; s.contains(x) && y <= top; ++y) {
                    if (s.contains(y) && !s.contains(x + y)) return false;
                }
            }
            return true;
        }();
        return again == s && closed_pairs && s.multiplicity() == g.front() &&
               NumericalSemigroup::from_value_set(s.values()) == s;
    });
}

// ---------------------------------------------------------------------------
// ideal: stability, endomorphism rings, colon decomposition

inline void check_ideals(const NumericalSemigroup& s, Report& rep) {
    const std::vector<int> probes = probe_values(s);

    for (int a : probes) {
        const auto what = [&] { return describe(s, a); };
        rep.guarded("ideal.stable_iff_blowup_is_endo", what, [&] {
            const IntegrallyClosedIdeal e = principal_closure(s, a);
            const bool st = is_stable(e);
            const bool ri = ring_RI(e) == endo_ring(e);
            const bool div = colon(e.values(), e.values()) == e.values().shifted(-a);
            return st == ri && ri == div;
        });
        rep.guarded("ideal.endo_is_dual_in_N", what, [&] {
            const IntegrallyClosedIdeal e = principal_closure(s, a);
            return endo_ring(e).values() == dual(e).values().at_least(0);
        });
        if (a > 0) {
            rep.guarded("ideal.principality", what, [&] {
                const PrincipalityTriple t = principality_triple(s, a);
                const IntegrallyClosedIdeal e = principal_closure(s, a);
                const bool principal = e.values() == s.values().shifted(a);
                const bool rad_principal =
                    radical(e).values() == s.values().shifted(s.multiplicity());
                return t.ideal_principal == principal && t.radical_principal == rad_principal &&
                       principal == rad_principal && principal == s.is_dvr();
            });
        }
    }

    // pairs E ⊆ F of closed ideals, i.e. a_E >= a_F
    for (int af : probes) {
        const IntegrallyClosedIdeal f = principal_closure(s, af);
        const NumericalSemigroup bf = endo_ring(f);
        const bool f_stable = is_stable(f);
        for (int ae : probes) {
            if (ae < af) continue;
            const IntegrallyClosedIdeal e = principal_closure(s, ae);
            const auto what = [&] {
                return describe(s) + " E=" + std::to_string(ae) + " F=" + std::to_string(af);
            };
            rep.guarded("ideal.endo_reverses_inclusion", what, [&] {
                const NumericalSemigroup be = endo_ring(e);
                if (!bf.values().is_subset_of(be.values())) return false;
                return sumset(bf.values(), e.values()).is_subset_of(e.values());
            });
            rep.guarded("ideal.colon_closed_over_endo", what, [&] {
                const ValueSet c = colon(e, f).values();
                const ValueIdeal over_b = over(bf, c);
                return over_b.is_integral() && integral_closure(over_b).values() == c;
            });
            if (f_stable) {
                rep.guarded("ideal.colon_by_stable_divides", what, [&] {
                    const ValueSet c = colon(e, f).values();
                    return c == e.values().shifted(-af) && sumset(f.values(), c) == e.values();
                });
            }
        }
    }

    // X_A = { a' / a : a' ∈ X_R, a' ⊆ I } for stable closed I, A = I : I
    for (int a : probes) {
        const IntegrallyClosedIdeal i = principal_closure(s, a);
        if (!is_stable(i)) continue;
        const NumericalSemigroup ring_a = endo_ring(i);
        const int top = s.conductor() + s.multiplicity();
        rep.guarded("ideal.closed_ideal_bijection", [&] { return describe(s, a); }, [&] {
            for (int b = a; b <= a + top; ++b) {
                if (!s.contains(b)) continue;
                const ValueSet moved = principal_closure(s, b).values().shifted(-a);
                const ValueIdeal over_a = over(ring_a, moved);
                if (!over_a.is_integral() || !(integral_closure(over_a).values() == moved)) {
                    return false;
                }
            }
            for (int d = 0; d <= top; ++d) {
                if (!ring_a.contains(d)) continue;
                const ValueSet back = principal_closure(ring_a, d).values().shifted(a);
                const ValueIdeal over_s = over(s, back);
                if (!over_s.is_integral() || !(integral_closure(over_s).values() == back) ||
                    !back.is_subset_of(i.values())) {
                    return false;
                }
            }
            return true;
        });
    }
}

// ---------------------------------------------------------------------------
// arf

inline void check_arf(const NumericalSemigroup& s, Report& rep) {
    const auto what = [&] { return describe(s); };
    const ArfCheck stab = is_arf_stability(s);
    const ArfCheck pat = is_arf_pattern(s);
    rep.record("arf.checker_equivalence", stab.holds == pat.holds, what);
    rep.guarded("arf.witness", what, [&] {
        return (!stab.witness || stab.witness->refutes(s)) &&
               (!pat.witness || pat.witness->refutes(s));
    });
    if (s.multiplicity() <= 2) rep.record("arf.multiplicity_two", stab.holds && pat.holds, what);
    if (stab.holds) rep.record("arf.minimal_multiplicity", has_minimal_multiplicity(s), what);

    rep.guarded("arf.closure_monotone", what, [&] {
        const NumericalSemigroup c = arf_closure(s);
        for (const auto& child : tree_children(s, s.conductor() + s.multiplicity() + 1)) {
            if (!arf_closure(child).values().is_subset_of(c.values())) return false;
        }
        return true;
    });
    rep.guarded("arf.closure", what, [&] {
        const NumericalSemigroup c = arf_closure(s);
        return s.values().is_subset_of(c.values()) && arf_closure(c) == c &&
               is_arf_stability(c).holds && is_arf_pattern(c).holds &&
               (!stab.holds || c == s);
    });
}

inline void check_tower(const NumericalSemigroup& s, Report& rep) {
    rep.guarded("arf.tower", [&] { return describe(s); }, [&] {
        const LipmanTower t = lipman_tower(s);
        for (const auto& ring : t.rings) {
            if (!is_arf_stability(ring).holds || !is_arf_pattern(ring).holds ||
                !has_minimal_multiplicity(ring)) {
                return false;
            }
        }
        for (std::size_t i = 0; i + 1 < t.rings.size(); ++i) {
            if (!t.rings[i].values().is_subset_of(t.rings[i + 1].values())) return false;
        }
        const bool reaches = t.rings.back().is_dvr() &&
                             static_cast<int>(t.length()) <= s.genus() + 1;
        const bool roundtrip = t.sequence.semigroup() == s &&
                               lipman_tower(t.sequence.semigroup()).sequence == t.sequence;
        return reaches && roundtrip;
    });
}

// ---------------------------------------------------------------------------
// decomp: requires S Arf

inline void check_decomposition(const NumericalSemigroup& s, Report& rep) {
    const LipmanTower tower = lipman_tower(s);
    const int top = s.conductor() + 2 * s.multiplicity();

    for (int a = 0; a <= top; ++a) {
        if (!s.contains(a)) continue;
        const auto what = [&] { return describe(s, a); };
        std::optional<DecompositionResult> slow;
        rep.guarded("decomp.product_of_maximal_ideals", what, [&] {
            slow = decompose(s, a);
            return slow->verified &&
                   product_of_factors(*slow) == principal_closure(s, a).values();
        });
        if (!slow) continue;
        const DecompositionResult& r = *slow;
        const IntegrallyClosedIdeal e = principal_closure(s, a);

        rep.guarded("decomp.fast_agreement", what, [&] { return decompose_fast(s, a) == r; });
        rep.guarded("decomp.partial_products", what, [&] { return partial_products_check(r, e); });

        rep.guarded("decomp.constant_endo_ring", what, [&] {
            for (const auto& st : r.steps) {
                if (!(endo_ring(over(st.ring, st.ideal.values())) == r.endpoint_B)) return false;
                if (!st.ring.values().is_subset_of(r.endpoint_B.values())) return false;
            }
            return true;
        });

        rep.guarded("decomp.principal_at_stall", what, [&] {
            // ring_{q+2} = ring_{q+1} because I_{q+1} is the unit ideal
            std::size_t n = 0;
            while (n + 1 < r.steps.size() && !(r.steps[n].ring == r.steps[n + 1].ring)) ++n;
            const TowerStep& st = r.steps[n];
            if (!(st.ideal.values() == st.ring.values().shifted(st.ideal.min()))) return false;
            for (std::size_t l = n; l < r.steps.size(); ++l) {
                if (!(r.steps[l].ring == r.endpoint_B)) return false;
            }
            return true;
        });

        rep.guarded("decomp.rings_follow_tower", what, [&] {
            for (int i = 0; i <= r.q + 1; ++i) {
                if (!(r.steps[static_cast<std::size_t>(i)].ring ==
                      tower.ring(static_cast<std::size_t>(i)))) {
                    return false;
                }
            }
            return true;
        });

        rep.guarded("decomp.termination", what, [&] {
            const TowerStep& last = r.steps.back();
            const bool ends = last.ideal.is_unit() && last.ring == r.endpoint_B &&
                              r.endpoint_B == endo_ring(e);
            const bool initial = [&] {
                for (int i = 0; i <= r.q; ++i) {
                    const TowerStep& st = r.steps[static_cast<std::size_t>(i)];
                    if (st.ideal.is_unit() || !st.radical) return false;
                }
                return true;
            }();
            const int limit = s.genus() + std::max(0, a - s.conductor()) + 1;
            const bool within_tower =
                a > s.conductor() || r.q + 1 <= static_cast<int>(tower.length());
            return ends && initial && within_tower && r.q + 1 <= limit;
        });

        rep.guarded("decomp.recursion_nesting", what, [&] {
            for (std::size_t n = 0; n + 1 < r.steps.size(); ++n) {
                const TowerStep& cur = r.steps[n];
                const TowerStep& nxt = r.steps[n + 1];
                if (!cur.ideal.values().is_subset_of(nxt.ideal.values())) return false;
                (void)over(nxt.ring, cur.ideal.values()); // throws unless an ideal of R_(I,n+1)
                if (!(cur.radical && *cur.radical == maximal_ideal(cur.ring))) return false;
            }
            return true;
        });

        if (s.is_dvr()) {
            rep.guarded("decomp.dvr_powers", what, [&] {
                for (const auto& f : r.factors) {
                    if (!(f.values() == ValueSet::tail(1))) return false;
                }
                return r.q + 1 == a;
            });
        }
    }

    rep.guarded("decomp.non_normal_count", [&] { return describe(s); }, [&] {
        const auto ideals = enumerate_non_normal_ideals(s);
        if (ideals.size() != s.small_elements().size()) return false;
        for (int a = s.conductor(); a <= top; ++a) {
            if (!(principal_closure(s, a).values() == ValueSet::tail(a))) return false;
        }
        return true;
    });
}

// ---------------------------------------------------------------------------
// exact layer vs brute-force oracle

/// Exact value set vs oracle model, over the region the oracle guarantees.
inline bool agrees(const ValueSet& exact, const oracle::BoundedSet& model) {
    if (exact.min() < -model.bound) return false;
    const int hi = std::max(model.valid_hi, exact.threshold());
    for (int x = -model.bound; x <= hi; ++x) {
        if (exact.contains(x) != model.contains(x)) return false;
    }
    return true;
}

inline void check_oracles(const NumericalSemigroup& s, Report& rep) {
    const int m = s.multiplicity();
    const int c = s.conductor();
    const int bound = 4 * (c + m) + 4;
    const auto what = [&] { return describe(s); };

    const auto& gens = s.minimal_generators();
    const int dp_bound = std::max(bound, gens.front() * gens.back());
    rep.guarded("oracle.semigroup", what, [&] {
        const auto window = oracle::semigroup_window(gens, dp_bound);
        return agrees(NumericalSemigroup::from_generators(gens).values(), window);
    });

    const oracle::BoundedSet so = oracle::from_members(s.small_elements(), c, bound);
    const oracle::BoundedSet mo = oracle::at_least(so, 1);
    rep.guarded("oracle.arf_closure", what, [&] {
        return agrees(arf_closure(s).values(), oracle::pattern_saturate(so));
    });

    for (int a : probe_values(s)) {
        const auto at = [&] { return describe(s, a); };
        const IntegrallyClosedIdeal e = principal_closure(s, a);
        const oracle::BoundedSet eo = oracle::at_least(so, a);
        const ValueIdeal mx = maximal_ideal(s);

        rep.guarded("oracle.stable", at, [&] { return is_stable(e) == oracle::stable(eo); });
        rep.guarded("oracle.sumset", at, [&] {
            return agrees(product(e, mx).values(), oracle::sumset(eo, mo));
        });
        rep.guarded("oracle.colon", at, [&] {
            return agrees(colon(e, mx).values(), oracle::colon(eo, mo)) &&
                   agrees(colon(mx, e).values(), oracle::colon(mo, eo));
        });
        rep.guarded("oracle.endo_ring", at, [&] {
            return agrees(endo_ring(e).values(), oracle::colon(eo, eo));
        });
        rep.guarded("oracle.dual", at, [&] {
            return agrees(dual(e).values(), oracle::colon(so, eo));
        });
        // fractional ideal with a negative value and a value outside S
        const std::vector<int> fgens{a - m - 1, a + 1};
        rep.guarded("oracle.fractional", at, [&] {
            const ValueIdeal fe = from_values(s, fgens);
            const oracle::BoundedSet fo = oracle::ideal_window(fgens, so);
            return agrees(fe.values(), fo) &&
                   agrees(product(fe, e).values(), oracle::sumset(fo, eo)) &&
                   agrees(colon(e, fe).values(), oracle::colon(eo, fo)) &&
                   agrees(colon(fe, e).values(), oracle::colon(fo, eo));
        });
    }
}

// ---------------------------------------------------------------------------
// the worked example over k[[t^3, t^11, t^13]]

inline void check_worked_example(Report& rep) {
    rep.guarded("regression.t3_t11_t13", [] { return std::string("S=⟨3,11,13⟩ a=6"); }, [] {
        const auto s = NumericalSemigroup::from_generators({3, 11, 13});
        const auto g = [](std::initializer_list<int> l) {
            return NumericalSemigroup::from_generators(l);
        };
        const LipmanTower t = lipman_tower(s);
        const std::vector<NumericalSemigroup> expect{s, g({3, 8, 10}), g({3, 5, 7}), g({2, 3}),
                                                     natural_numbers()};
        const DecompositionResult r = decompose(s, 6);
        const ValueSet i_values = ValueSet::from_elements(std::vector<int>{6, 9}, 11);
        return t.rings == expect && t.sequence.entries() == std::vector<int>{3, 3, 3, 2} &&
               r.q == 1 && r.steps[0].radical->values() == maximal_ideal(s).values() &&
               r.steps[1].ideal.values() == maximal_ideal(g({3, 8, 10})).values() &&
               r.steps[1].ring == g({3, 8, 10}) && r.endpoint_B == g({3, 5, 7}) &&
               product_of_factors(r) == i_values && r.verified;
    });
}

// ---------------------------------------------------------------------------
// drivers

inline void check_all(const NumericalSemigroup& s, Report& rep) {
    check_semigroup(s, rep);
    check_ideals(s, rep);
    check_arf(s, rep);
    check_oracles(s, rep);
    if (is_arf(s)) {
        check_tower(s, rep);
        check_decomposition(s, rep);
    }
}

inline bool semigroup_order(const NumericalSemigroup& l, const NumericalSemigroup& r) {
    if (l.conductor() != r.conductor()) return l.conductor() < r.conductor();
    return l.small_elements() < r.small_elements();
}

inline Report run_single(const NumericalSemigroup& s) {
    Report rep;
    check_worked_example(rep);
    check_all(s, rep);
    return rep;
}

/// Every numerical semigroup with conductor <= max_conductor.
inline Report run_exhaustive(int max_conductor) {
    std::vector<NumericalSemigroup> family = all_semigroups(max_conductor);
    std::sort(family.begin(), family.end(), semigroup_order);
    Report rep;
    check_worked_example(rep);
    for (const auto& s : family) check_all(s, rep);
    return rep;
}

/// `count` random semigroups with conductor <= max_conductor; same seed, same run.
inline Report run_random(int count, int max_conductor, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Report rep;
    check_worked_example(rep);
    for (int i = 0; i < count; ++i) check_all(random_semigroup(max_conductor, rng), rep);
    return rep;
}

} // namespace arfkit::verify
