#include <random>

#include <gtest/gtest.h>

#include "futaki/multipoly.hpp"
#include "support.hpp"

using namespace futaki;
using futaki::test::Q;
using futaki::test::vq;

TEST(PolyEval, Examples)
{
    const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    EXPECT_EQ(poly_eval(x1 + x2, vq({1, 2})), Rational(3));
    EXPECT_EQ(poly_eval(x1 - MultiPoly::constant(2, Q("13/12")), vq({1, 0})), Q("-1/12"));
    EXPECT_EQ(poly_eval(MultiPoly(2), vq({Q("5/7"), Q("-3")})), Rational(0));
}

TEST(PolyEval, DimensionMismatch)
{
    EXPECT_THROW(poly_eval(MultiPoly::variable(2, 0), vq({1, 2, 3})), std::invalid_argument);
}

TEST(MultiPoly, DegreeCap)
{
    const MultiPoly x = MultiPoly::variable(1, 0);
    EXPECT_EQ(x.pow(64).degree(), 64u);
    EXPECT_THROW(x.pow(65), std::length_error);
}

TEST(MultiPoly, ArithmeticAndCanonicalForm)
{
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    const MultiPoly sq = (x + y) * (x + y);
    EXPECT_EQ(sq, x * x + Rational(2) * x * y + y * y);
    EXPECT_TRUE((sq - sq).is_zero());
    EXPECT_EQ(MultiPoly::coordinate_sum(2), x + y);
    // substitution x -> y, y -> x
    const std::vector<MultiPoly> swap{y, x};
    EXPECT_EQ((x * x * y).substitute(swap), x * y * y);
    // shift by t means p(x + t)
    EXPECT_EQ(poly_eval(sq.shifted(vq({1, 2})), vq({0, 0})), Rational(9));
}

TEST(MultiPoly, DoubleEvaluationMatchesExact)
{
    const MultiPoly p = parse_poly("x1^3 - 2/3*x1*x2 + 5", 2);
    Eigen::VectorXd xd(2);
    xd << 0.5, -1.25;
    EXPECT_NEAR(p(xd), to_double(poly_eval(p, vq({Q("1/2"), Q("-5/4")}))), 1e-12);
}

TEST(RadialEval, Examples)
{
    EXPECT_EQ(radial_eval(RadialSum::power(2, 0), vq({1, 1})), Rational(1));
    const RadialSum minor = RadialSum::power(2, 0, Rational(16)) - RadialSum::power(2, -4, Rational(9));
    EXPECT_EQ(radial_eval(minor, vq({1, 1})), Q("247/16"));
    const RadialSum r(MultiPoly::variable(2, 0), -4);
    EXPECT_EQ(radial_eval(r, vq({2, 2})), Q("1/128"));
}

TEST(RadialEval, RejectsNegativePowerAtOrigin)
{
    const RadialSum r = RadialSum::power(2, -2);
    EXPECT_THROW(radial_eval(r, vq({1, -1})), std::domain_error);
    EXPECT_EQ(radial_eval(RadialSum::power(2, 2), vq({1, -1})), Rational(0));
}

TEST(RadialSum, MergesEqualPowers)
{
    RadialSum r(2);
    r.add_term(MultiPoly::variable(2, 0), -2);
    r.add_term(MultiPoly::variable(2, 1), -2);
    EXPECT_EQ(r.terms().size(), 1u);
    r.add_term(-MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1), -2);
    EXPECT_TRUE(r.is_zero());
}

TEST(RadialSum, ToPolyOnlyForNonnegativePowers)
{
    const RadialSum r = RadialSum::power(2, 2);
    EXPECT_EQ(r.to_poly(), MultiPoly::coordinate_sum(2).pow(2));
    EXPECT_THROW(RadialSum::power(2, -1).to_poly(), std::domain_error);
}

// eval(r1 + r2) = eval(r1) + eval(r2) on random data
TEST(RadialProperty, EvaluationDistributesOverSum)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9), power(-6, 3), num(1, 40), den(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        RadialSum r1(3), r2(3);
        for (int t = 0; t < 3; ++t) {
            r1.add_term(MultiPoly::variable(3, t) * Rational(coef(rng)), power(rng));
            r2.add_term(MultiPoly::constant(3, Rational(coef(rng))), power(rng));
        }
        const VectorQ x = vq({Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                              Rational(num(rng), den(rng))});
        ASSERT_EQ(radial_eval(r1 + r2, x), radial_eval(r1, x) + radial_eval(r2, x));
        ASSERT_EQ(radial_eval(r1 * r2, x), radial_eval(r1, x) * radial_eval(r2, x));
    }
}

TEST(Parse, RadialExpressions)
{
    const RadialSum r = parse_radial("16 - 9*X^-4", 2);
    EXPECT_EQ(radial_eval(r, vq({1, 1})), Q("247/16"));
    const RadialSum s = parse_radial("x1*X^(-4) + (x2 - 1)^2/3", 2);
    EXPECT_EQ(radial_eval(s, vq({2, 2})), Q("1/128") + Q("1/3"));
    EXPECT_THROW(parse_radial("x3", 2), std::invalid_argument);
    EXPECT_THROW(parse_radial("1 +", 2), std::invalid_argument);
    EXPECT_THROW(parse_poly("X^-1", 2), std::domain_error);
}

// printing a polynomial and parsing it back gives the same polynomial
TEST(ParseProperty, PrintParseRoundTrip)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-20, 20), den(1, 7), e(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly p(3);
        for (int t = 0; t < 4; ++t)
            p.add_term({static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng)),
                        static_cast<unsigned>(e(rng))},
                       Rational(coef(rng), den(rng)));
        ASSERT_EQ(parse_poly(p.str(), 3), p) << p.str();
    }
}
