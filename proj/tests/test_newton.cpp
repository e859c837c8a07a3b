#include <gtest/gtest.h>

#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/newton.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/polytext.hpp"
#include "support.hpp"

using namespace pinchuk;

namespace {

using V = std::vector<LatticePoint>;

struct Polygons {
    NewtonPolygon p, q, qt;
};

const Polygons& polygons()
{
    static const Polygons ps = [] {
        PinchukMap m = default_map(), a = alternate_map();
        return Polygons{newton_polygon(m.P), newton_polygon(m.Q), newton_polygon(a.Q)};
    }();
    return ps;
}

NewtonPolygon square() { return convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

}  // namespace

TEST(NewtonPolygonTest, VertexSets)
{
    EXPECT_EQ(polygons().p.vertices, (V{{0, 0}, {2, 0}, {6, 4}, {0, 1}}));
    EXPECT_EQ(polygons().q.vertices, (V{{0, 0}, {5, 0}, {15, 10}, {3, 4}, {0, 1}}));
    EXPECT_EQ(polygons().qt.vertices, (V{{0, 0}, {8, 0}, {24, 16}, {0, 4}}));
}

TEST(NewtonPolygonTest, SameAsDominantTerms)
{
    EXPECT_EQ(newton_polygon(parse_poly("x^6*y^4 + x^2 + y")).vertices, polygons().p.vertices);
    EXPECT_EQ(newton_polygon(parse_poly("x^15*y^10 + x^3*y^4 + x^5 + y")).vertices, polygons().q.vertices);
    EXPECT_EQ(newton_polygon(parse_poly("x^24*y^16 + x^8 + y^4")).vertices, polygons().qt.vertices);
}

TEST(NewtonPolygonTest, Errors)
{
    EXPECT_THROW(newton_polygon(MultiPoly()), ZeroPolynomial);
    EXPECT_THROW(newton_polygon(parse_poly("x*z")), ForeignVariable);
}

TEST(NewtonPolygonTest, CollinearPointsDropped)
{
    EXPECT_EQ(newton_polygon(parse_poly("x + x^2 + x^3")).vertices, (V{{0, 0}, {3, 0}}));
    EXPECT_EQ(newton_polygon(parse_poly("1")).vertices, (V{{0, 0}}));
}

TEST(RadialSimilarity, DefaultAndAlternate)
{
    EXPECT_EQ(radial_similarity(polygons().p, polygons().qt), 4);
    EXPECT_FALSE(radial_similarity(polygons().p, polygons().q).has_value());
    EXPECT_EQ(radial_similarity(polygons().p, polygons().p), 1);
}

TEST(RadialSimilarity, ReciprocalScale)
{
    auto up = radial_scale(polygons().p, polygons().qt), down = radial_scale(polygons().qt, polygons().p);
    ASSERT_TRUE(up && down);
    EXPECT_EQ(*up * *down, 1);
    EXPECT_FALSE(radial_similarity(polygons().qt, polygons().p).has_value());
}

TEST(EdgeSlopes, P)
{
    std::vector<EdgeSlope> expected{{false, 0}, {false, 1}, {false, make_rational(1, 2)}, vertical_slope()};
    EXPECT_EQ(edge_slopes(polygons().p), expected);
}

TEST(EdgeSlopes, NoNegativeSlopes)
{
    EXPECT_FALSE(has_negative_slope(polygons().p));
    EXPECT_FALSE(has_negative_slope(polygons().q));
    EXPECT_FALSE(has_negative_slope(polygons().qt));
    EXPECT_TRUE(has_negative_slope(convex_hull({{0, 0}, {2, 0}, {0, 2}})));
}

TEST(EdgeSlopes, UnitSquare)
{
    std::vector<EdgeSlope> expected{{false, 0}, vertical_slope(), {false, 0}, vertical_slope()};
    EXPECT_EQ(edge_slopes(square()), expected);
}

TEST(EdgeSlopes, DegenerateRejected) { EXPECT_THROW(edge_slopes(convex_hull({{0, 0}})), DegeneratePolygon); }

TEST(Containment, SupportPointsInside)
{
    PinchukMap m = default_map();
    for (const MultiPoly* q : {&m.P, &m.Q}) {
        NewtonPolygon poly = newton_polygon(*q);
        for (const auto& t : q->terms()) {
            Monomial mono = q->monomial_of(t);
            EXPECT_TRUE(contains(poly, {mono.exponent("x"), mono.exponent("y")}));
        }
    }
    EXPECT_FALSE(contains(polygons().p, {7, 4}));
    EXPECT_FALSE(contains(polygons().p, {0, 2}));
}

TEST(Containment, RandomPolynomials)
{
    testkit::Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        MultiPoly q = rng.poly({"x", "y"}, 8, 10);
        if (q.is_zero()) continue;
        NewtonPolygon poly = newton_polygon(q);
        for (const auto& t : q.terms()) {
            Monomial mono = q.monomial_of(t);
            EXPECT_TRUE(contains(poly, {mono.exponent("x"), mono.exponent("y")}));
        }
        EXPECT_TRUE(contains(poly, {0, 0}));
    }
}

TEST(NewtonText, Format) { EXPECT_EQ(to_string(polygons().p), "(0,0)\n(2,0)\n(6,4)\n(0,1)\n"); }
