#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "futaki/polytope.hpp"
#include "support.hpp"

using namespace futaki;
using namespace futaki::test;

namespace {

Rational total_volume(const std::vector<Simplex>& simplices)
{
    Rational v(0);
    for (const auto& s : simplices)
        v += simplex_volume(s);
    return v;
}

std::vector<VectorQ> sorted(std::vector<VectorQ> vs)
{
    std::sort(vs.begin(), vs.end(), lex_less);
    return vs;
}

} // namespace

TEST(Vertices, BlowupSlabInTwoDimensions)
{
    const DelzantPolytope p = standard_blowup_polytope(2, Rational(3));
    const std::vector<VectorQ> want{vq({0, 1}), vq({0, 3}), vq({1, 0}), vq({3, 0})};
    EXPECT_EQ(vertices(p), want);
}

TEST(Vertices, UnitSquareAndThreeSlab)
{
    EXPECT_EQ(vertices(unit_square()).size(), 4u);
    const DelzantPolytope p = standard_blowup_polytope(3, Rational(2));
    std::vector<VectorQ> want;
    for (int i = 0; i < 3; ++i)
        for (int s : {1, 2}) {
            VectorQ v = VectorQ::Zero(3);
            v[i] = s;
            want.push_back(v);
        }
    EXPECT_EQ(vertices(p), sorted(want));
}

TEST(Construction, RejectsBadInput)
{
    // half-plane pair: unbounded
    EXPECT_THROW(DelzantPolytope(2, {hs({1, 0}, 0), hs({-1, 0}, 1), hs({0, 1}, 0)}),
                 std::domain_error);
    // empty
    EXPECT_THROW(DelzantPolytope(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)}),
                 std::domain_error);
    // flat
    EXPECT_THROW(DelzantPolytope(2, {hs({1, 0}, 0), hs({-1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, 1)}),
                 std::domain_error);
    EXPECT_THROW(DelzantPolytope(2, {hs({2, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, 1)}),
                 std::invalid_argument);
    EXPECT_THROW(DelzantPolytope(2, {hs({0, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, 1)}),
                 std::invalid_argument);
}

TEST(Construction, PrunesRedundantHalfSpaces)
{
    const DelzantPolytope p(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, 1), hs({-1, 0}, 5)});
    EXPECT_EQ(p.facet_count(), 3u);
}

TEST(Triangulate, VolumesMatchClosedForms)
{
    EXPECT_EQ(total_volume(triangulate(standard_blowup_polytope(2, Rational(3)))), Rational(4));
    EXPECT_EQ(total_volume(triangulate(standard_blowup_polytope(3, Rational(2)))), Q("7/6"));
    const DelzantPolytope simplex(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, 1)});
    const auto t = triangulate(simplex);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(simplex_volume(t[0]), Q("1/2"));
}

// triangulating from any root vertex gives the same volume
TEST(TriangulateProperty, VolumeIndependentOfRoot)
{
    for (int n = 2; n <= 4; ++n) {
        const DelzantPolytope p = standard_blowup_polytope(n, Q("5/2"));
        const Rational v0 = total_volume(triangulate(p));
        for (std::size_t r = 0; r < p.vertices().size(); ++r)
            EXPECT_EQ(total_volume(triangulate(p, r)), v0) << "n=" << n << " root=" << r;
    }
    EXPECT_THROW(triangulate(unit_square(), 99), std::out_of_range);
}

TEST(FacetTriangulate, Examples)
{
    const DelzantPolytope p = standard_blowup_polytope(2, Rational(3));
    // facet 1 is x2 >= 0; facet 3 is 3 - X >= 0
    const auto bottom = facet_triangulate(p, 1);
    ASSERT_EQ(bottom.size(), 1u);
    EXPECT_EQ(sorted({bottom[0].vertices.row(0).transpose(), bottom[0].vertices.row(1).transpose()}),
              (std::vector<VectorQ>{vq({1, 0}), vq({3, 0})}));
    const auto top = facet_triangulate(p, 3);
    ASSERT_EQ(top.size(), 1u);
    EXPECT_EQ(sorted({top[0].vertices.row(0).transpose(), top[0].vertices.row(1).transpose()}),
              (std::vector<VectorQ>{vq({0, 3}), vq({3, 0})}));
    const DelzantPolytope p3 = standard_blowup_polytope(3, Rational(2));
    const auto inner = facet_triangulate(p3, 3);
    ASSERT_EQ(inner.size(), 1u);
    EXPECT_EQ(inner[0].vertices.rows(), 3);
    EXPECT_THROW(facet_triangulate(p, 4), std::out_of_range);
}

TEST(Delzant, Examples)
{
    for (int n = 2; n <= 4; ++n)
        for (const Rational& b : {Q("3/2"), Q("2"), Q("7")})
            EXPECT_TRUE(is_delzant(standard_blowup_polytope(n, b)));
    EXPECT_FALSE(is_delzant(DelzantPolytope(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -2}, 2)})));
    EXPECT_TRUE(is_delzant(unit_square()));
}

// relabelling the half-spaces never changes the answer
TEST(DelzantProperty, InvariantUnderRelabelling)
{
    std::vector<HalfSpace> good = standard_blowup_polytope(3, Rational(2)).halfspaces();
    std::vector<HalfSpace> bad{hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -2}, 2)};
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        std::shuffle(good.begin(), good.end(), rng);
        std::shuffle(bad.begin(), bad.end(), rng);
        EXPECT_TRUE(is_delzant(DelzantPolytope(3, good)));
        EXPECT_FALSE(is_delzant(DelzantPolytope(2, bad)));
    }
}

TEST(StandardBlowup, HalfSpaceCountsAndErrors)
{
    EXPECT_EQ(standard_blowup_polytope(2, Rational(3)).facet_count(), 4u);
    EXPECT_EQ(standard_blowup_polytope(3, Rational(2)).facet_count(), 5u);
    EXPECT_THROW(standard_blowup_polytope(2, Rational(1)), std::domain_error);
    EXPECT_THROW(standard_blowup_polytope(2, Q("1/2")), std::domain_error);
}

TEST(Translate, Examples)
{
    const DelzantPolytope p = standard_blowup_polytope(2, Rational(3));
    const DelzantPolytope q = translate(p, vi({1, 0}));
    std::vector<VectorQ> shifted;
    for (const auto& v : p.vertices())
        shifted.push_back(v + vq({1, 0}));
    EXPECT_EQ(q.vertices(), sorted(shifted));
    EXPECT_EQ(translate(p, vi({0, 0})).halfspaces(), p.halfspaces());
    EXPECT_EQ(translate(q, vi({-1, 0})).halfspaces(), p.halfspaces());
}

// vertices(translate(P, t)) = vertices(P) + t
TEST(TranslateProperty, CommutesWithVertices)
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-7, 7);
    for (int n = 2; n <= 4; ++n) {
        const DelzantPolytope p = standard_blowup_polytope(n, Q("9/4"));
        for (int k = 0; k < 10; ++k) {
            IntVector t(n);
            for (int i = 0; i < n; ++i)
                t[i] = d(rng);
            std::vector<VectorQ> moved;
            for (const auto& v : p.vertices())
                moved.push_back(v + t.cast<Rational>());
            EXPECT_EQ(translate(p, t).vertices(), sorted(moved));
        }
    }
}

TEST(Polytope, ContainsAndBoundingBox)
{
    const DelzantPolytope p = standard_blowup_polytope(2, Rational(3));
    EXPECT_TRUE(p.contains(vq({1, 1})));
    EXPECT_TRUE(p.contains(vq({3, 0})));
    EXPECT_FALSE(p.contains(vq({Q("1/4"), Q("1/4")})));
    const auto [lo, hi] = p.bounding_box();
    EXPECT_EQ(lo, vq({0, 0}));
    EXPECT_EQ(hi, vq({3, 3}));
}
