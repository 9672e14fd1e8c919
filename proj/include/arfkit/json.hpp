#pragma once

/**
 * @file json.hpp
 * @brief JSON forms of semigroups, ideals, towers, decompositions and
 *        verification reports. Keys keep insertion order so output is
 *        byte-stable.
 *
 * Every reader validates what it reads and rebuilds the object through the
 * normal constructors; a document that does not describe a valid object
 * throws errc::invalid_argument (or the constructor's own error).
 */

#include "arf.hpp"
#include "decomp.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"
#include "value_set.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace arfkit::json {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw error(errc::invalid_argument, std::string("JSON: missing field \"") + key + "\"");
    }
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::invalid_argument, std::string("JSON: field \"") + key + "\": " + e.what());
    }
}

} // namespace detail

// value sets: {"elements":[…],"threshold":T}

inline Json value_set_to_json(const ValueSet& v) {
    return Json{{"elements", v.small_elements()}, {"threshold", v.threshold()}};
}

inline ValueSet value_set_from_json(const Json& j) {
    const auto el = detail::get<std::vector<int>>(j, "elements");
    return ValueSet::from_elements(el, detail::get<int>(j, "threshold"));
}

// semigroups

inline Json to_json(const NumericalSemigroup& s) {
    return Json{{"generators", s.minimal_generators()},
                {"small_elements", s.small_elements()},
                {"conductor", s.conductor()}};
}

inline NumericalSemigroup semigroup_from_json(const Json& j) {
    const auto small = detail::get<std::vector<int>>(j, "small_elements");
    NumericalSemigroup s = NumericalSemigroup::from_value_set(
        ValueSet::from_elements(small, detail::get<int>(j, "conductor")));
    if (s.small_elements() != small ||
        s.minimal_generators() != detail::get<std::vector<int>>(j, "generators")) {
        throw error(errc::invalid_argument, "JSON: semigroup fields are inconsistent");
    }
    return s;
}

// ideals: {"ambient":…,"elements":[…],"threshold":T}

inline Json to_json(const ValueIdeal& e) {
    return Json{{"ambient", to_json(e.ambient())},
                {"elements", e.values().small_elements()},
                {"threshold", e.threshold()}};
}

inline Json to_json(const IntegrallyClosedIdeal& e) { return to_json(e.ideal()); }

inline ValueIdeal ideal_from_json(const Json& j) {
    return ValueIdeal(semigroup_from_json(detail::field(j, "ambient")), value_set_from_json(j));
}

inline IntegrallyClosedIdeal closed_ideal_from_json(const Json& j) {
    const ValueIdeal e = ideal_from_json(j);
    IntegrallyClosedIdeal c = principal_closure(e.ambient(), e.min());
    if (!(c.ideal() == e)) {
        throw error(errc::invalid_argument, "JSON: ideal is not integrally closed");
    }
    return c;
}

// towers: {"rings":[…],"multiplicity_sequence":[…]}

inline Json to_json(const LipmanTower& t) {
    Json rings = Json::array();
    for (const auto& r : t.rings) rings.push_back(to_json(r));
    return Json{{"rings", std::move(rings)}, {"multiplicity_sequence", t.sequence.entries()}};
}

inline LipmanTower tower_from_json(const Json& j) {
    const auto& rings = detail::field(j, "rings");
    if (!rings.is_array() || rings.empty()) {
        throw error(errc::invalid_argument, "JSON: tower needs a nonempty ring list");
    }
    LipmanTower t = lipman_tower(semigroup_from_json(rings.front()));
    bool same = rings.size() == t.rings.size();
    for (std::size_t i = 0; same && i < rings.size(); ++i) {
        same = semigroup_from_json(rings[i]) == t.rings[i];
    }
    if (!same || detail::get<std::vector<int>>(j, "multiplicity_sequence") != t.sequence.entries()) {
        throw error(errc::invalid_argument, "JSON: tower is not the Lipman tower of its base");
    }
    return t;
}

// decompositions

inline Json to_json(const DecompositionResult& r) {
    Json tower = Json::array();
    for (const auto& st : r.steps) {
        tower.push_back(Json{{"ring", to_json(st.ring)},
                             {"ideal", to_json(st.ideal)},
                             {"radical", st.radical ? to_json(*st.radical) : Json(nullptr)},
                             {"shift", st.shift}});
    }
    Json factors = Json::array();
    for (const auto& f : r.factors) {
        factors.push_back(Json{{"ring", to_json(f.ambient())}, {"values", value_set_to_json(f.values())}});
    }
    return Json{{"semigroup", to_json(r.semigroup)},
                {"a", r.a},
                {"q", r.q},
                {"tower", std::move(tower)},
                {"factors", std::move(factors)},
                {"endpoint_B", to_json(r.endpoint_B)},
                {"verified", r.verified}};
}

inline DecompositionResult decomposition_from_json(const Json& j) {
    DecompositionResult r;
    r.semigroup = semigroup_from_json(detail::field(j, "semigroup"));
    r.a = detail::get<int>(j, "a");
    r.q = detail::get<int>(j, "q");
    const auto& tower = detail::field(j, "tower");
    if (!tower.is_array()) throw error(errc::invalid_argument, "JSON: tower must be an array");
    int index = 0;
    for (const auto& st : tower) {
        const auto& rad = detail::field(st, "radical");
        r.steps.push_back({index++, semigroup_from_json(detail::field(st, "ring")),
                           ideal_from_json(detail::field(st, "ideal")),
                           rad.is_null() ? std::nullopt
                                         : std::optional(closed_ideal_from_json(rad)),
                           detail::get<int>(st, "shift")});
    }
    for (const auto& f : detail::field(j, "factors")) {
        const NumericalSemigroup ring = semigroup_from_json(detail::field(f, "ring"));
        const ValueSet values = value_set_from_json(detail::field(f, "values"));
        IntegrallyClosedIdeal c = principal_closure(ring, values.min());
        if (!(c.values() == values)) {
            throw error(errc::invalid_argument, "JSON: factor is not integrally closed");
        }
        r.factors.push_back(std::move(c));
    }
    r.endpoint_B = semigroup_from_json(detail::field(j, "endpoint_B"));
    r.verified = detail::get<bool>(j, "verified");
    return r;
}

// Arf checks and verification reports

inline Json to_json(const ArfWitness& w) {
    if (w.kind == ArfWitness::Kind::pattern_triple) {
        return Json{{"kind", "pattern_triple"}, {"x", w.x}, {"y", w.y}, {"z", w.z}};
    }
    return Json{{"kind", "unstable_ideal"}, {"a", w.a}};
}

inline Json to_json(const verify::Report& rep) {
    Json props = Json::array();
    for (const auto& t : rep.tallies()) {
        props.push_back(Json{{"name", t.name},
                             {"checked", t.checked},
                             {"passed", t.passed},
                             {"counterexample", t.counterexample ? Json(*t.counterexample)
                                                                 : Json(nullptr)}});
    }
    return Json{{"ok", rep.ok()}, {"failures", rep.failures()}, {"properties", std::move(props)}};
}

inline std::string dump(const Json& j, bool pretty = true) { return pretty ? j.dump(2) : j.dump(); }

} // namespace arfkit::json
