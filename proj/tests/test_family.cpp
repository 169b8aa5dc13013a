#include <random>

#include <gtest/gtest.h>

#include "futaki/family.hpp"
#include "futaki/linalg.hpp"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

TEST(Solvable, Examples)
{
    EXPECT_TRUE(solvable(2, Rational(11), Rational(3)));
    EXPECT_EQ(solvability_value(2, Rational(11), Rational(3)), Rational(8));
    EXPECT_FALSE(solvable(2, Q("5/3"), Rational(3)));
    EXPECT_EQ(solvability_value(2, Q("5/3"), Rational(3)), Rational(1));
    EXPECT_TRUE(solvable(3, Rational(3), Rational(2)));
    EXPECT_EQ(solvability_value(3, Rational(3), Rational(2)), Q("33/7"));
    EXPECT_THROW(solvable(2, Rational(1), Rational(3)), HypothesisViolation);
    EXPECT_THROW(solvable(2, Rational(3), Rational(1)), HypothesisViolation);
}

TEST(MakeSpec, Examples)
{
    const FamilySpec s = make_spec(2, Rational(11), Rational(3));
    EXPECT_EQ(s.A, Rational(4));
    EXPECT_EQ(s.B, Rational(-3));
    EXPECT_EQ(s.lambda, Rational(8));
    const FamilySpec t = make_spec(3, Rational(3), Rational(2));
    EXPECT_EQ(t.A, Q("11/7"));
    EXPECT_EQ(t.B, Q("-4/7"));
    EXPECT_EQ(t.lambda, Q("33/7"));
    EXPECT_THROW(make_spec(2, Q("5/3"), Rational(3)), HypothesisViolation);
    try {
        make_spec(2, Q("5/3"), Rational(3));
    } catch (const HypothesisViolation& e) {
        EXPECT_NE(std::string(e.what()).find("ab^{n-1}"), std::string::npos) << e.what();
    }
    const FamilySpec f = make_spec_forced(2, Q("5/3"), Rational(3));
    EXPECT_FALSE(f.solvable);
    EXPECT_FALSE(make_spec(2, Q("7/2"), Rational(3)).integral_class);
}

TEST(SlopeIntersection, Examples)
{
    EXPECT_EQ(slope_lambda_intersection(2, Rational(11), Rational(3)), Rational(8));
    EXPECT_EQ(slope_lambda_intersection(3, Rational(3), Rational(2)), Q("33/7"));
    for (const Rational& b : {Q("3/2"), Q("4"), Q("19/7")})
        EXPECT_EQ(slope_lambda_intersection(2, b, b), Rational(2));
}

TEST(TransitionMap, Examples)
{
    const FamilySpec s = make_spec(2, Rational(11), Rational(3));
    EXPECT_EQ(transition_map(s, vq({1, 0})), vq({1, 0}));
    EXPECT_EQ(transition_map(s, vq({3, 0})), vq({11, 0}));
    EXPECT_EQ(transition_map(make_spec(3, Rational(3), Rational(2)), vq({2, 0, 0})), vq({3, 0, 0}));
    EXPECT_THROW(transition_map(s, vq({1, -1})), std::domain_error);
    EXPECT_THROW(transition_map(s, vq({1, 1, 1})), std::invalid_argument);
}

TEST(Jacobian, Examples)
{
    const FamilySpec s = make_spec(2, Rational(11), Rational(3));
    MatrixQ want(2, 2);
    want << Rational(4), Q("3/4"), Q("3/4"), Rational(4);
    EXPECT_EQ(jacobian(s, vq({1, 1})), want);
    EXPECT_EQ(minor_sum(s, vq({1, 1})), Q("247/16"));
    const FamilySpec t = make_spec(3, Rational(3), Rational(2));
    const MatrixQ j = jacobian(t, vq({1, 0, 0}));
    // radial direction is an eigenvector: DU x = f'(X) x
    EXPECT_EQ(j * vq({1, 0, 0}), profile_derivative(t, Rational(1)) * vq({1, 0, 0}));
    EXPECT_EQ(j(1, 1), profile(t, Rational(1)));
    EXPECT_EQ(j(1, 0), Rational(0));
    EXPECT_EQ(minor_sum(t, vq({1, 0, 0})), Q("45/7"));
}

TEST(MinorSumRadial, Examples)
{
    const FamilySpec s = make_spec(2, Rational(11), Rational(3));
    EXPECT_EQ(minor_sum_radial(s),
              RadialSum::power(2, 0, Rational(16)) - RadialSum::power(2, -4, Rational(9)));
    const FamilySpec t = make_spec(3, Rational(3), Rational(2));
    EXPECT_EQ(minor_sum_radial(t), RadialSum::power(3, 0, Q("363/49")) - RadialSum::power(3, -6, Q("48/49")));
}

// trace, minor sum and determinant against the explicit Jacobian at random points
TEST(FamilyProperty, JacobianInvariants)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(1, 60), den(1, 13);
    for (int n = 2; n <= 5; ++n) {
        const FamilySpec s = make_spec(n, Rational(3), Rational(2));
        const RadialSum e2 = minor_sum_radial(s);
        for (int k = 0; k < 100; ++k) {
            VectorQ x(n);
            for (int i = 0; i < n; ++i)
                x[i] = Rational(num(rng), den(rng));
            const MatrixQ j = jacobian(s, x);
            ASSERT_EQ(j.trace(), s.lambda);
            ASSERT_EQ(minor_sum(s, x), radial_eval(e2, x));
            ASSERT_EQ(exact_determinant(j), jacobian_determinant_factored(s, x));
        }
    }
}

TEST(FamilyProperty, ProfileIncreasingOnSolvableSpecs)
{
    const std::vector<std::tuple<int, Rational, Rational>> specs{
        {2, Rational(11), Rational(3)}, {3, Rational(3), Rational(2)},
        {2, Rational(7), Rational(5)},     {4, Rational(9), Q("5/4")}};
    for (const auto& [n, a, b] : specs) {
        const FamilySpec s = make_spec(n, a, b);
        for (int k = 0; k < 1000; ++k) {
            const Rational X = 1 + (b - 1) * Rational(k, 999);
            ASSERT_GT(profile_derivative(s, X), 0) << "n=" << n << " X=" << X;
        }
        EXPECT_EQ(profile(s, Rational(1)), Rational(1));
        EXPECT_EQ(profile(s, b), a);
    }
}

TEST(ScaledClass, ReductionAndScale)
{
    const ScaledClass c = make_scaled_class(Rational(6), Rational(2));
    EXPECT_EQ(c.reduced(), Rational(3));
    EXPECT_EQ(c.scale(), Rational(2));
    EXPECT_THROW(make_scaled_class(Rational(2), Rational(2)), HypothesisViolation);
    EXPECT_THROW(make_scaled_class(Rational(2), Rational(0)), HypothesisViolation);
    EXPECT_EQ(ratio_scale_factor(make_scaled_class(Rational(22), Rational(2)),
                                 make_scaled_class(Rational(9), Rational(3))),
              Q("3/4"));
}
