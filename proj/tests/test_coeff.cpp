#include "support.hpp"

#include <gtest/gtest.h>

using namespace eqhom;
using support::random_coeff_poly;

namespace {

CoeffPoly e(const AbelianGroup& g, int index, int k = 1) { return CoeffPoly::symbol(EulerSymbol(g.from_index(index)), k); }

}  // namespace

TEST(Coeff, TrivialSymbolRejected)
{
    AbelianGroup g = AbelianGroup::parse("Z3");
    EXPECT_THROW(EulerSymbol(g.identity()), PreconditionError);
}

TEST(Coeff, EulerClassExamples)
{
    AbelianGroup g = AbelianGroup::parse("Z4");
    EXPECT_TRUE(euler_class(Representation(g)).is_one());
    EXPECT_TRUE(euler_class(g.parse_representation("(1)+(0)")).is_zero());
    EXPECT_EQ(euler_class(g.parse_representation("(3)+(1)+(1)")), e(g, 1, 2) * e(g, 3));
    EXPECT_EQ(euler_class(g.parse_representation("(2)")).degree(), -2);
    EXPECT_EQ(euler_class(g.parse_representation("(2)+(3)+(1)")).degree(), -6);
}

// e(V + W) = e(V) e(W), against an oracle that multiplies one symbol per
// summand and zeroes on the trivial character.
TEST(Coeff, EulerClassMultiplicativeExhaustive)
{
    for (const char* gs : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
        AbelianGroup g = AbelianGroup::parse(gs);
        auto all = all_characters(g);
        std::vector<Representation> reps{Representation(g)};
        for (const auto& a : all) {
            reps.emplace_back(g, std::vector<Character>{a});
            for (const auto& b : all)
                reps.emplace_back(g, std::vector<Character>{a, b});
        }
        for (const auto& v : reps) {
            CoeffPoly want = CoeffPoly::one(g);
            for (const auto& c : v.summands())
                want = c.is_trivial() ? CoeffPoly::zero(g) : want * e(g, c.index());
            EXPECT_EQ(euler_class(v), want);
            for (const auto& w : reps)
                EXPECT_EQ(euler_class(direct_sum(v, w)), euler_class(v) * euler_class(w));
        }
    }
}

TEST(Coeff, RingAxiomsRandom)
{
    std::mt19937_64 rng(7);
    for (const char* gs : {"1", "Z2", "Z3", "Z2xZ2"}) {
        AbelianGroup g = AbelianGroup::parse(gs);
        for (int k = 0; k < 150; ++k) {
            CoeffPoly a = random_coeff_poly(rng, g), b = random_coeff_poly(rng, g), c = random_coeff_poly(rng, g);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_TRUE((a - a).is_zero());
            EXPECT_EQ(a * CoeffPoly::one(g), a);
            // integral domain: nonzero times nonzero is nonzero
            if (!a.is_zero() && !b.is_zero()) {
                EXPECT_FALSE((a * b).is_zero());
                auto q = (a * b).divide_exact(b);
                ASSERT_TRUE(q);
                EXPECT_EQ(*q, a);
            }
        }
    }
}

TEST(Coeff, ExactDivisionFailsWhenNotDivisible)
{
    AbelianGroup g = AbelianGroup::parse("Z3");
    EXPECT_FALSE(e(g, 1).divide_exact(e(g, 2)));
    EXPECT_FALSE(CoeffPoly::constant(g, 3).divide_exact(CoeffPoly::constant(g, 2)));
    EXPECT_EQ(*(e(g, 1, 2) + e(g, 1) * e(g, 2)).divide_exact(e(g, 1)), e(g, 1) + e(g, 2));
}

TEST(Coeff, DegreeOnlyForHomogeneous)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    EXPECT_EQ(CoeffPoly::one(g).degree(), 0);
    EXPECT_FALSE((CoeffPoly::one(g) + e(g, 1)).degree());
    EXPECT_FALSE(CoeffPoly::zero(g).degree());
}

TEST(Coeff, SpecializationIsRingHomomorphism)
{
    std::mt19937_64 rng(11);
    AbelianGroup g = AbelianGroup::parse("Z2xZ2");
    Specialization s(g);
    s.assign(EulerSymbol(g.from_index(1)), CoeffPoly::constant(g, 2));
    s.assign(EulerSymbol(g.from_index(2)), e(g, 3) + CoeffPoly::one(g));
    for (int k = 0; k < 100; ++k) {
        CoeffPoly a = random_coeff_poly(rng, g), b = random_coeff_poly(rng, g);
        EXPECT_EQ(specialize(a + b, s), specialize(a, s) + specialize(b, s));
        EXPECT_EQ(specialize(a * b, s), specialize(a, s) * specialize(b, s));
    }
    EXPECT_EQ(specialize(e(g, 3), s), e(g, 3));
    EXPECT_TRUE(specialize(e(g, 1) * e(g, 3), Specialization::vanishing(g)).is_zero());
    EXPECT_EQ(specialize(CoeffPoly::constant(g, 5), Specialization::vanishing(g)), CoeffPoly::constant(g, 5));
}

TEST(Coeff, TextAndJson)
{
    AbelianGroup g = AbelianGroup::parse("Z4");
    CoeffPoly p = e(g, 3) * e(g, 1, 2) - CoeffPoly::constant(g, 2);
    EXPECT_EQ(to_text(p), "-2 + e[(1)]^2*e[(3)]");
    EXPECT_EQ(to_text(CoeffPoly::zero(g)), "0");
    json j = to_json(p);
    ASSERT_EQ(j.size(), 2u);
    bool found = false;
    for (const auto& t : j)
        if (t["exponents"].contains("(1)")) {
            EXPECT_EQ(t["coeff"], 1);
            EXPECT_EQ(t["exponents"]["(1)"], 2);
            EXPECT_EQ(t["exponents"]["(3)"], 1);
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(Coeff, BigIntegersStayExact)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    CoeffPoly x = CoeffPoly::constant(g, 1) + e(g, 1);
    CoeffPoly p = x.pow(70);
    auto c = p.poly().terms().find(Exponents{{1, 35}});
    ASSERT_NE(c, p.poly().terms().end());
    EXPECT_EQ(c->second.str(), "112186277816662845432");
    EXPECT_EQ(to_json(p).size(), 71u);
}
