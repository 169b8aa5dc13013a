#include <random>

#include <gtest/gtest.h>

#include "futaki/character.hpp"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

TEST(ClassicalFutaki, Examples)
{
    EXPECT_EQ(classical_futaki_axis(standard_blowup_polytope(2, Rational(3)), 0), Q("1/3"));
    EXPECT_EQ(classical_futaki_axis(standard_blowup_polytope(3, Rational(2)), 0), Q("1/12"));
    for (int n = 2; n <= 3; ++n)
        for (int i = 0; i < n; ++i)
            EXPECT_EQ(classical_futaki_axis(box(n, Rational(-1), Rational(1)), i), Rational(0));
}

TEST(AlphaFutaki, Examples)
{
    const FamilySpec s = make_spec(2, Rational(11), Rational(3));
    EXPECT_EQ(alpha_futaki_axis(s, 0, Rational(2), Rational(0)), Q("1/3"));
    EXPECT_EQ(alpha_futaki_axis(s, 0, Rational(0), Rational(1)), Q("4/3"));
    EXPECT_EQ(alpha_futaki_axis(s, 1, Rational(8), Rational(-1)), Rational(0));
    EXPECT_THROW(alpha_futaki_axis(s, 2, Rational(1), Rational(1)), std::out_of_range);
}

TEST(RequiredRatio, Examples)
{
    EXPECT_EQ(required_ratio(make_spec(2, Rational(11), Rational(3))), Q("-1/8"));
    EXPECT_EQ(required_ratio(make_spec(3, Rational(3), Rational(2))), Q("-49/18"));
    EXPECT_EQ(published_ratio_n3(Rational(3), Rational(2)), Q("-49/66"));
    EXPECT_EQ(published_ratio_n2_statement(Rational(11), Rational(3)), Q("-1/4"));
    // a = b: the bulk term vanishes while the boundary term does not
    const FamilySpec id = make_spec(2, Rational(3), Rational(3));
    EXPECT_FALSE(required_ratio(id).has_value());
    EXPECT_EQ(verdict(id, Rational(1), Rational(1)), Verdict::NoVanishingPossible);
}

TEST(RequiredRatio, ClosedFormOnRationalGrid)
{
    for (int k = 1; k <= 20; ++k) {
        const Rational b = 1 + Rational(k, 4);
        const Rational a = b + Rational(k % 3 + 1, 2);
        EXPECT_EQ(required_ratio(make_spec(2, a, b)), -(b * b - 1) / ((b - a) * (b - a)));
    }
}

TEST(Verdict, Examples)
{
    const FamilySpec s = make_spec(2, Rational(11), Rational(3));
    EXPECT_EQ(verdict(s, Rational(1), Rational(1)), Verdict::ObstructedForPositiveAlpha);
    EXPECT_EQ(verdict(s, Rational(8), Rational(-1)), Verdict::VanishesAtRatio);
    EXPECT_EQ(verdict(s, Rational(1), Rational(-1)), Verdict::Obstructed);
    EXPECT_EQ(verdict(make_spec(3, Rational(3), Rational(2)), Rational(1), Rational(1)),
              Verdict::ObstructedForPositiveAlpha);
    EXPECT_THROW(verdict(s, Rational(0), Rational(0)), std::invalid_argument);
    EXPECT_THROW(verdict(s, Rational(0), Rational(1)), std::invalid_argument);
}

TEST(KfRuled, Examples)
{
    const RuledSurfaceClass c = kf_ruled_ratio(0, 1, 1, Rational(4), Rational(-1));
    ASSERT_TRUE(c.h_coef && c.e_coef);
    EXPECT_EQ(*c.h_coef, Rational(11));
    EXPECT_EQ(*c.e_coef, Rational(1));
    EXPECT_EQ(c.ratio, Q("-1/8"));
    for (int k = 1; k <= 5; ++k) {
        const RuledSurfaceClass r = kf_ruled_ratio(0, 1, 1, Rational(1 + 3 * k), Rational(-k));
        EXPECT_EQ(*r.h_coef, Rational(8 * k + 3));
        EXPECT_EQ(r.ratio, -Rational(1, 8 * k * k));
        EXPECT_EQ(r.ratio, *required_ratio(make_spec(2, Rational(8 * k + 3), Rational(3))));
    }
    EXPECT_THROW(kf_ruled_ratio(0, 1, 1, Rational(1), Rational(0)), std::invalid_argument);
    EXPECT_FALSE(kf_ruled_ratio(2, 2, 1, Rational(1), Rational(1)).h_coef.has_value());
}

TEST(Report, DiscrepanciesAndLogCoefficients)
{
    const CharacterReport r2 = character_report(make_spec(2, Rational(11), Rational(3)), Rational(8),
                                                Rational(-1));
    ASSERT_EQ(r2.discrepancies.size(), 1u);
    EXPECT_EQ(*r2.discrepancies[0].factor, Rational(2));
    for (const auto& q : r2.bulk_log_coeff)
        EXPECT_EQ(q, Rational(0));
    for (const auto& v : r2.character)
        EXPECT_EQ(v, Rational(0));
    EXPECT_EQ(r2.verdict, Verdict::VanishesAtRatio);
    const CharacterReport r3 = character_report(make_spec(3, Rational(3), Rational(2)));
    ASSERT_EQ(r3.discrepancies.size(), 1u);
    EXPECT_EQ(r3.discrepancies[0].published, Q("-49/66"));
    EXPECT_EQ(r3.discrepancies[0].computed, Q("-49/18"));
    const CharacterReport forced = character_report(make_spec_forced(2, Q("5/3"), Rational(3)));
    EXPECT_TRUE(forced.hypothesis_violated);
    EXPECT_THROW(character_report(make_spec(2, Rational(11), Rational(3)), Rational(1)),
                 std::invalid_argument);
}

// the character is linear in (alpha0, alpha1)
TEST(CharacterProperty, Linearity)
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> d(-30, 30);
    for (int n = 2; n <= 3; ++n) {
        const FamilySpec s = make_spec(n, Rational(3), Rational(2));
        for (int k = 0; k < 20; ++k) {
            const Rational p(d(rng), 7), q(d(rng), 5), u(d(rng), 3), v(d(rng), 11), t(d(rng), 2);
            const Rational lhs = alpha_futaki_axis(s, 0, p + t * u, q + t * v);
            const Rational rhs =
                alpha_futaki_axis(s, 0, p, q) + t * alpha_futaki_axis(s, 0, u, v);
            ASSERT_EQ(lhs, rhs);
        }
    }
}

// the boundary term does not see integer translations of the polytope
TEST(CharacterProperty, BoundaryTermTranslationInvariant)
{
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int n = 2; n <= 3; ++n) {
        const DelzantPolytope p = standard_blowup_polytope(n, Q("11/4"));
        for (int k = 0; k < 5; ++k) {
            IntVector t(n);
            for (int i = 0; i < n; ++i)
                t[i] = d(rng);
            const DelzantPolytope q = translate(p, t);
            for (int i = 0; i < n; ++i)
                EXPECT_EQ(classical_futaki_axis(q, i), classical_futaki_axis(p, i));
        }
    }
}

TEST(CharacterProperty, AxisSymmetryAndLogCancellation)
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{
                 {Rational(3), Rational(2)}, {Q("7/2"), Q("5/3")}, {Rational(20), Rational(6)}}) {
            const FamilySpec s = make_spec(n, a, b);
            const LogLinear b0 = bulk_term(s, 0);
            EXPECT_EQ(b0.q1, Rational(0));
            for (int i = 1; i < n; ++i)
                EXPECT_EQ(bulk_term(s, i), b0);
            EXPECT_NO_THROW(required_ratio(s));
        }
}

TEST(Scan, GridAndErrors)
{
    const auto rows = scan(2, Rational(2), Rational(12), Rational(2), Rational(5), Rational(1));
    EXPECT_EQ(rows.size(), 44u);
    for (const auto& r : rows) {
        if (!r.solvable)
            continue;
        if (r.a == r.b) {
            EXPECT_FALSE(r.ratio.has_value());
            EXPECT_EQ(r.verdict, Verdict::NoVanishingPossible);
        } else {
            ASSERT_TRUE(r.ratio.has_value());
            EXPECT_LT(*r.ratio, 0);
        }
    }
    for (const auto& r : scan(3, Rational(2), Rational(6), Rational(2), Rational(4), Q("1/2")))
        if (r.solvable && r.ratio)
            EXPECT_LT(*r.ratio, 0);
    EXPECT_THROW(scan(2, Rational(2), Rational(3), Rational(2), Rational(3), Rational(0)),
                 std::invalid_argument);
    EXPECT_THROW(scan(2, Rational(5), Rational(3), Rational(2), Rational(3), Rational(1)),
                 std::invalid_argument);
}
