#include "arfkit/json.hpp"

#include <gtest/gtest.h>

using namespace arfkit;
using json::Json;

namespace {

NumericalSemigroup gens(std::initializer_list<int> g) { return NumericalSemigroup::from_generators(g); }

}

TEST(Json, SemigroupSchema) {
    const Json j = json::to_json(gens({3, 11, 13}));
    EXPECT_EQ(j.dump(), R"({"generators":[3,11,13],"small_elements":[0,3,6,9],"conductor":11})");
    EXPECT_EQ(json::semigroup_from_json(j), gens({3, 11, 13}));
    EXPECT_EQ(json::semigroup_from_json(json::to_json(natural_numbers())), natural_numbers());
}

TEST(Json, IdealSchema) {
    const ValueIdeal e = principal_closure(gens({3, 11, 13}), 6);
    const Json j = json::to_json(e);
    EXPECT_EQ(j["elements"], Json::parse("[6,9]"));
    EXPECT_EQ(j["threshold"], 11);
    EXPECT_EQ(json::ideal_from_json(j), e);
    const ValueIdeal f = from_values(gens({2, 3}), {-2});
    EXPECT_EQ(json::ideal_from_json(Json::parse(json::to_json(f).dump())), f);
}

TEST(Json, TowerRoundTrip) {
    const LipmanTower t = lipman_tower(gens({3, 11, 13}));
    const Json j = json::to_json(t);
    EXPECT_EQ(j["multiplicity_sequence"], Json::parse("[3,3,3,2]"));
    EXPECT_EQ(j["rings"].size(), 5u);
    const LipmanTower back = json::tower_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.rings, t.rings);
    EXPECT_EQ(back.sequence, t.sequence);
}

TEST(Json, DecompositionRoundTrip) {
    for (const auto& s : arf_semigroups(16)) {
        for (int a = 0; a <= s.conductor() + s.multiplicity(); ++a) {
            if (!s.contains(a)) continue;
            const DecompositionResult r = decompose(s, a);
            const std::string text = json::to_json(r).dump();
            const DecompositionResult back = json::decomposition_from_json(Json::parse(text));
            ASSERT_EQ(back, r) << text;
            ASSERT_EQ(json::to_json(back).dump(), text);
        }
    }
}

TEST(Json, DecompositionSchemaKeys) {
    const Json j = json::to_json(decompose(gens({3, 11, 13}), 6));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"semigroup", "a", "q", "tower", "factors", "endpoint_B",
                                              "verified"}));
    EXPECT_EQ(j["q"], 1);
    EXPECT_TRUE(j["tower"][2]["radical"].is_null());
    EXPECT_EQ(j["factors"][1]["ring"]["generators"], Json::parse("[3,8,10]"));
    EXPECT_EQ(j["endpoint_B"]["generators"], Json::parse("[3,5,7]"));
    EXPECT_EQ(j["verified"], true);
}

TEST(Json, RejectsInconsistentDocuments) {
    Json j = json::to_json(gens({3, 11, 13}));
    j["generators"] = Json::parse("[3,11]");
    EXPECT_THROW(json::semigroup_from_json(j), error);
    EXPECT_THROW(json::semigroup_from_json(Json::parse(R"({"small_elements":[0,3]})")), error);
    EXPECT_THROW(json::semigroup_from_json(Json::parse(R"({"generators":[2],"small_elements":[0,3],"conductor":5})")),
                 error);
}
