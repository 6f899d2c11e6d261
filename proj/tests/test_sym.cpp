#include "support.hpp"

#include <gtest/gtest.h>

using namespace eqhom;

namespace {

CoeffPoly e(const AbelianGroup& g, int index) { return CoeffPoly::symbol(EulerSymbol(g.from_index(index))); }

SymPoly beta(const AbelianGroup& g, int i, int shift = -2) { return SymPoly::beta(g, shift, i); }

}  // namespace

TEST(Sym, Degrees)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    for (int d : {-2, 0, 2}) {
        EXPECT_EQ(SymPoly::beta_degree(0, d), -d);
        EXPECT_EQ((beta(g, 1, d) * beta(g, 2, d)).internal_degree(), 6 - 2 * d);
        EXPECT_EQ((beta(g, 1, d) * beta(g, 2, d)).dimension(), 2);
    }
    // e[(1)] beta_1 has degree -2 + 2 - d, same as beta_0
    SymPoly t = beta(g, 0) + e(g, 1) * beta(g, 1);
    EXPECT_EQ(t.internal_degree(), 2);
    EXPECT_EQ(t.dimension(), 1);
    EXPECT_FALSE((beta(g, 0) + beta(g, 1) * beta(g, 1)).dimension());
    EXPECT_THROW(SymPoly::beta(g, 1, 0), PreconditionError);
    EXPECT_THROW(beta(g, 1, -2) + beta(g, 1, 2), PreconditionError);
}

TEST(Sym, ThetaMulExample)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    Flag f = Flag::parse(g, "(0),(1)");
    SymPoly got = theta_mul(f, g.from_index(1), beta(g, 0));
    EXPECT_EQ(got, beta(g, 0) * beta(g, 0) + e(g, 1) * (beta(g, 0) * beta(g, 1)));
    EXPECT_EQ(to_text(got), "beta[0]^2 + e[(1)]*beta[0]*beta[1]");
    EXPECT_EQ(theta_mul(f, g.identity(), beta(g, 1)), beta(g, 0) * beta(g, 1));
    EXPECT_TRUE(theta_mul(f, g.identity(), SymPoly::zero(g, -2)).is_zero());
}

TEST(Sym, ThetaMulIsInjectiveOnSamples)
{
    std::mt19937_64 rng(5);
    AbelianGroup g = AbelianGroup::parse("Z3");
    Flag f = Flag::standard(g, 4);
    for (int k = 0; k < 100; ++k) {
        SymPoly x = random_sym(rng, g, -2, uniform(rng, 0, 3), 4);
        for (const auto& a : all_characters(g))
            EXPECT_EQ(x.is_zero(), theta_mul(f, a, x).is_zero());
    }
}

TEST(Retract, Examples)
{
    AbelianGroup g = AbelianGroup::parse("1");
    SymPoly x = beta(g, 1) * beta(g, 2);
    EXPECT_TRUE(retract(x, 1).is_zero());
    EXPECT_EQ(retract(beta(g, 0) * x, 2), x);
    EXPECT_EQ(retract(beta(g, 0).pow(3), 2), beta(g, 0).pow(2));
    EXPECT_EQ(retract(beta(g, 0), 0), SymPoly::one(g, -2));
    EXPECT_THROW(retract(x, 2), PreconditionError);
    EXPECT_THROW(retract(x, -1), PreconditionError);
}

TEST(Retract, SplitsThetaEpsLinearly)
{
    std::mt19937_64 rng(9);
    AbelianGroup g = AbelianGroup::parse("Z2xZ2");
    Flag f = Flag::standard(g, 5);
    for (int k = 0; k < 100; ++k) {
        const int n = uniform(rng, 0, 4);
        SymPoly x = random_sym(rng, g, 2, n, 5);
        EXPECT_EQ(retract(theta_mul(f, g.identity(), x), n), x);
    }
}

TEST(Retract, OnlyForFirstFlagStep)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    Flag f = Flag::parse(g, "(0),(1)");
    EXPECT_EQ(retract_for(f, g.identity(), beta(g, 0), 0), SymPoly::one(g, -2));
    EXPECT_THROW(retract_for(f, g.from_index(1), beta(g, 0), 0), PreconditionError);
}

TEST(Loc, ModeValidation)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    Flag f = Flag::parse(g, "(0),(1)");
    EXPECT_THROW(LocFraction(f, LocMode::mUP, SymPoly::one(g, 2), {{g.from_index(1), 1}}), PreconditionError);
    EXPECT_THROW(LocFraction(f, LocMode::mUP, SymPoly::one(g, -2)), PreconditionError);
    EXPECT_THROW(LocFraction(Flag::parse(AbelianGroup::parse("Z3"), "(0)"), LocMode::MUP,
                             SymPoly::one(AbelianGroup::parse("Z3"), -2), {{AbelianGroup::parse("Z3").from_index(1), 1}}),
                 PreconditionError);
    EXPECT_NO_THROW(LocFraction(f, LocMode::mUP, SymPoly::one(g, 2), {{g.identity(), 3}}));
}

TEST(Loc, FracEqAndReduce)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    Flag f = Flag::parse(g, "(0),(1)");
    Character s = g.from_index(1);
    SymPoly th = theta_class(f, s, -2);
    LocFraction one(f, LocMode::MUP, SymPoly::one(g, -2));
    LocFraction tt(f, LocMode::MUP, th, {{s, 1}});
    EXPECT_TRUE(frac_eq(tt, one));
    EXPECT_EQ(frac_reduce(tt).denom().size(), 0u);
    EXPECT_EQ(frac_reduce(tt).num(), SymPoly::one(g, -2));
    LocFraction b1(f, LocMode::MUP, beta(g, 1), {{s, 1}});
    EXPECT_FALSE(frac_eq(b1, one));
    EXPECT_EQ(frac_reduce(b1).denom(), b1.denom());
    LocFraction zero(f, LocMode::MUP, SymPoly::zero(g, -2), {{s, 2}});
    EXPECT_TRUE(frac_reduce(zero).denom().empty());
    EXPECT_THROW(frac_eq(one, LocFraction(f, LocMode::MUP, SymPoly::one(g, 2))), PreconditionError);
}

TEST(Loc, DimDegree)
{
    AbelianGroup g = AbelianGroup::parse("Z2");
    Flag f = Flag::parse(g, "(0),(1)");
    Character s = g.from_index(1);
    EXPECT_EQ(dim_degree(LocFraction(f, LocMode::MUP, beta(g, 1) * beta(g, 2), {{s, 2}})), 0);
    EXPECT_EQ(dim_degree(LocFraction(f, LocMode::MUP, beta(g, 1), {{s, 2}})), -1);
    EXPECT_EQ(dim_degree(theta_div(s, LocFraction(f, LocMode::MUP, theta_class(f, s, -2)))), 0);
    EXPECT_THROW(dim_degree(LocFraction(f, LocMode::MUP, SymPoly::zero(g, -2))), PreconditionError);
    EXPECT_THROW(dim_degree(LocFraction(f, LocMode::MUP, beta(g, 1) + beta(g, 1) * beta(g, 1))), PreconditionError);
}

// Field-of-fractions laws checked through frac_eq on random inputs.
TEST(Loc, ArithmeticRandom)
{
    std::mt19937_64 rng(13);
    for (const char* gs : {"Z2", "Z4", "Z2xZ2"}) {
        AbelianGroup g = AbelianGroup::parse(gs);
        for (int k = 0; k < 60; ++k) {
            Flag f = random_flag(rng, g, uniform(rng, 2, 5));
            auto frac = [&]() {
                int p = uniform(rng, 0, 2);
                return random_fraction(rng, f, LocMode::MUP, -2, uniform(rng, 0, 2), p, 4);
            };
            LocFraction a = frac(), b = frac(), c = frac();
            EXPECT_TRUE(frac_eq(a + b, b + a));
            EXPECT_TRUE(frac_eq(a * (b + c), a * b + a * c));
            EXPECT_TRUE(frac_eq(a - a, LocFraction(f, LocMode::MUP, SymPoly::zero(g, -2))));
            EXPECT_TRUE(frac_eq(frac_reduce(a), a));
            const auto steps = eqhom::detail::distinct_steps(f);
            Character alpha = steps[uniform(rng, 0, static_cast<int>(steps.size()) - 1)];
            EXPECT_TRUE(frac_eq(theta_mul(alpha, theta_div(alpha, a)), a));
            EXPECT_TRUE(frac_eq(theta_div(alpha, theta_mul(alpha, a)), a));
        }
    }
}
