#include "arfkit/decomp.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace arfkit;

namespace {

NumericalSemigroup gens(std::initializer_list<int> g) { return NumericalSemigroup::from_generators(g); }
ValueSet vs(std::vector<int> small, int t) { return ValueSet::from_elements(small, t); }

const NumericalSemigroup S = gens({3, 11, 13});

std::vector<NumericalSemigroup> factor_rings(const DecompositionResult& r) {
    std::vector<NumericalSemigroup> out;
    for (const auto& f : r.factors) out.push_back(f.ambient());
    return out;
}

}

TEST(Decompose, WorkedExample) {
    const DecompositionResult r = decompose(S, 6);
    EXPECT_EQ(r.q, 1);
    ASSERT_EQ(r.steps.size(), 3u);
    EXPECT_EQ(r.steps[0].radical->values(), vs({3, 6, 9}, 11));
    EXPECT_EQ(r.steps[1].ring, gens({3, 8, 10}));
    EXPECT_EQ(r.steps[1].ideal.values(), maximal_ideal(gens({3, 8, 10})).values());
    EXPECT_EQ(r.steps[1].shift, 3);
    EXPECT_EQ(factor_rings(r), (std::vector<NumericalSemigroup>{S, gens({3, 8, 10})}));
    EXPECT_EQ(r.endpoint_B, gens({3, 5, 7}));
    EXPECT_EQ(product_of_factors(r), vs({6, 9}, 11));
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(decompose_fast(S, 6), r);
}

TEST(Decompose, DvrIsPowerOfMaximalIdeal) {
    for (int k = 1; k <= 6; ++k) {
        const DecompositionResult r = decompose(natural_numbers(), k);
        EXPECT_EQ(r.q, k - 1);
        ASSERT_EQ(r.factors.size(), static_cast<std::size_t>(k));
        for (const auto& f : r.factors) EXPECT_EQ(f.values(), ValueSet::tail(1));
        EXPECT_TRUE(r.verified);
    }
}

TEST(Decompose, CuspAtFour) {
    const DecompositionResult r = decompose(gens({2, 3}), 4);
    EXPECT_EQ(r.q, 2);
    EXPECT_EQ(factor_rings(r),
              (std::vector<NumericalSemigroup>{gens({2, 3}), natural_numbers(), natural_numbers()}));
    EXPECT_EQ(product_of_factors(r), ValueSet::tail(4));
    EXPECT_TRUE(r.verified);
}

TEST(Decompose, FastPathExamples) {
    const DecompositionResult nine = decompose_fast(S, 9);
    EXPECT_EQ(nine.q, 2);
    EXPECT_EQ(factor_rings(nine),
              (std::vector<NumericalSemigroup>{S, gens({3, 8, 10}), gens({3, 5, 7})}));
    EXPECT_EQ(nine, decompose(S, 9));

    const DecompositionResult eleven = decompose_fast(S, 11);
    EXPECT_EQ(eleven.q, 3);
    EXPECT_EQ(product_of_factors(eleven), ValueSet::tail(11));
    EXPECT_EQ(eleven, decompose(S, 11));

    const DecompositionResult unit = decompose_fast(S, 0);
    EXPECT_EQ(unit.q, -1);
    EXPECT_TRUE(unit.factors.empty());
    EXPECT_EQ(unit.endpoint_B, S);
    EXPECT_EQ(unit, decompose(S, 0));
}

TEST(Decompose, Errors) {
    EXPECT_THROW(decompose(S, 5), error);
    try {
        decompose(S, 5);
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_in_semigroup);
    }
    EXPECT_THROW(decompose(gens({4, 6, 7}), 4), not_arf_error);
    EXPECT_THROW(decompose_fast(gens({4, 6, 7}), 4), not_arf_error);
}

TEST(Decompose, PartialProducts) {
    const DecompositionResult r = decompose(S, 6);
    EXPECT_TRUE(partial_products_check(r, principal_closure(S, 6)));
    // n = 0: m_0 + I_1 = I
    EXPECT_EQ(sumset(r.steps[0].radical->values(), r.steps[1].ideal.values()), vs({6, 9}, 11));
}

TEST(Decompose, NonNormalIdeals) {
    std::vector<int> mins;
    for (const auto& e : enumerate_non_normal_ideals(S)) mins.push_back(e.min_value());
    EXPECT_EQ(mins, (std::vector<int>{0, 3, 6, 9}));
    EXPECT_TRUE(enumerate_non_normal_ideals(natural_numbers()).empty());
    EXPECT_EQ(enumerate_non_normal_ideals(gens({2, 3})).size(), 1u);
    EXPECT_THROW(enumerate_non_normal_ideals(gens({4, 6, 7})), not_arf_error);
}

TEST(Decompose, PrincipalityTriple) {
    const auto dvr = principality_triple(natural_numbers(), 5);
    EXPECT_TRUE(dvr.ideal_principal && dvr.radical_principal && dvr.ring_is_dvr);
    const auto s = principality_triple(S, 6);
    EXPECT_FALSE(s.ideal_principal || s.radical_principal || s.ring_is_dvr);
    const auto c = principality_triple(gens({2, 3}), 2);
    EXPECT_FALSE(c.ideal_principal || c.radical_principal || c.ring_is_dvr);
    try {
        principality_triple(S, 0);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unit_ideal);
    }
}

TEST(Decompose, SweepAgreesWithFastPath) {
    for (const auto& s : arf_semigroups(22)) {
        for (int a = 0; a <= s.conductor() + 2 * s.multiplicity(); ++a) {
            if (!s.contains(a)) continue;
            const DecompositionResult r = decompose(s, a);
            ASSERT_TRUE(r.verified) << s.to_string() << " a=" << a;
            ASSERT_EQ(product_of_factors(r), principal_closure(s, a).values());
            ASSERT_EQ(decompose_fast(s, a), r) << s.to_string() << " a=" << a;
        }
    }
}
