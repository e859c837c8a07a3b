#include <gtest/gtest.h>

#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/identities.hpp"
#include "pinchuk/levelset.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/polytext.hpp"
#include "pinchuk/ratfunc.hpp"
#include "support.hpp"

using namespace pinchuk;

namespace {

MultiPoly X() { return MultiPoly::variable("x"); }
MultiPoly Y() { return MultiPoly::variable("y"); }
MultiPoly H() { return MultiPoly::variable("h"); }
MultiPoly C() { return MultiPoly::variable("c"); }
MultiPoly k(long v) { return MultiPoly::constant(v); }

}  // namespace

TEST(RatFuncArith, SumOfEqualDenominators)
{
    RatFunc a(k(1), X());
    RatFunc s = a + a;
    EXPECT_EQ(s.num() * X(), k(2) * s.den());
    RatFunc u = a + RatFunc(k(1), X() * X());
    EXPECT_EQ(u.den(), X() * X() * X());
    EXPECT_TRUE(rf_equal(s, RatFunc(k(2), X())));
}

TEST(RatFuncArith, ProductCancelsUnderEquality)
{
    RatFunc p = RatFunc(X(), Y()) * RatFunc(Y(), X());
    EXPECT_TRUE(rf_equal(p, RatFunc(k(1))));
}

TEST(RatFuncArith, DivisionByZeroFunction)
{
    EXPECT_THROW(RatFunc(X(), MultiPoly()), DivisionByZero);
    EXPECT_THROW(RatFunc(X()) / RatFunc(MultiPoly()), DivisionByZero);
}

TEST(RatFuncArith, BuildsHOfR)
{
    auto R = identity_substitution(IdentityVariant::plus);
    RatFunc t = R.first * R.second - RatFunc(k(1));
    RatFunc xt1 = R.first * t + RatFunc(k(1));
    EXPECT_TRUE(rf_equal(t * xt1, RatFunc((X() + Y()) * Y())));
}

TEST(RfEqual, ScaledFraction) { EXPECT_TRUE(rf_equal(RatFunc(X(), Y()), RatFunc(k(2) * X(), k(2) * Y()))); }

TEST(RfEqual, DistinguishesDifferentFunctions) { EXPECT_FALSE(rf_equal(RatFunc(X(), Y()), RatFunc(Y(), X()))); }

TEST(RfEqual, EquivalenceOnFixtures)
{
    std::vector<RatFunc> f{RatFunc(X(), Y()), RatFunc(k(3) * X(), k(3) * Y()), RatFunc(X() * (X() + k(1)), Y() * (X() + k(1))),
                           RatFunc(Y(), X()), RatFunc(X() * X() - k(1), X() - k(1)), RatFunc(X() + k(1))};
    for (const auto& a : f) {
        EXPECT_TRUE(rf_equal(a, a));
        for (const auto& b : f) {
            EXPECT_EQ(rf_equal(a, b), rf_equal(b, a));
            for (const auto& c : f) {
                if (rf_equal(a, b) && rf_equal(b, c)) {
                    EXPECT_TRUE(rf_equal(a, c));
                }
            }
        }
    }
}

TEST(RfEqual, ImpliesEqualEvaluations)
{
    RatFunc a(X() * X() - Y() * Y(), X() + Y() + k(2));
    RatFunc b((X() - Y()) * (X() + Y()) * (X() + k(1)), (X() + Y() + k(2)) * (X() + k(1)));
    ASSERT_TRUE(rf_equal(a, b));
    testkit::Rng rng(31);
    int checked = 0;
    while (checked < 100) {
        Point pt{{"x", rng.rational()}, {"y", rng.rational()}};
        if (evaluate(a.den(), pt) == 0 || evaluate(b.den().with_variables({"x", "y"}), pt) == 0) continue;
        EXPECT_EQ(rf_evaluate(a, pt), rf_evaluate(b, pt));
        ++checked;
    }
}

TEST(RfSubstitute, LevelSetProductXY)
{
    LevelSetParam ls = level_set_param();
    RatFunc t = rf_substitute(X() * Y() - k(1), ls.bindings());
    RatFunc expected = RatFunc((H() + k(1)) * (C() - H() - H() * H()), C() - H()) - RatFunc(k(1));
    EXPECT_TRUE(rf_equal(t, expected));
}

TEST(RfSubstitute, IdentityBinding)
{
    RatFunc r = rf_substitute(X(), {{"x", RatFunc(X())}});
    EXPECT_EQ(r.num(), X());
    EXPECT_TRUE(r.den().is_one());
}

TEST(RfSubstitute, GeneratorTOfR)
{
    PinchukMap m = default_map();
    auto R = identity_substitution(IdentityVariant::plus);
    RatFunc t = rf_substitute(m.t, {{"x", R.first}, {"y", R.second}});
    EXPECT_TRUE(rf_equal(t, RatFunc(X() * Y())));
}

TEST(RfSubstitute, CommutesWithEvaluation)
{
    testkit::Rng rng(37);
    std::vector<std::string> xy{"x", "y"};
    for (int i = 0; i < 20; ++i) {
        MultiPoly p = rng.poly(xy, 4, 5);
        RatFunc bx(rng.poly({"a", "b"}, 2, 3), rng.poly({"a", "b"}, 1, 2) + k(5));
        RatFunc by(rng.poly({"a", "b"}, 2, 3), rng.poly({"a", "b"}, 2, 2) + k(7));
        Point pt{{"a", rng.rational(3, 5)}, {"b", rng.rational(3, 5)}};
        RatFunc composed = rf_substitute(p, {{"x", bx}, {"y", by}});
        MultiPoly dx = bx.den().with_variables({"a", "b"}), dy = by.den().with_variables({"a", "b"});
        if (evaluate(dx, pt) == 0 || evaluate(dy, pt) == 0) continue;
        if (evaluate(composed.den().with_variables({"a", "b"}), pt) == 0) continue;
        BigRational direct = evaluate(p, {{"x", rf_evaluate(bx, pt)}, {"y", rf_evaluate(by, pt)}});
        EXPECT_EQ(rf_evaluate(composed, pt), direct);
    }
}

TEST(RfSpecialize, XYTendsToOneOnPoleCurve)
{
    LevelSetParam ls = level_set_param();
    RatFunc r = rf_specialize(ls.x_of * ls.y_of, "c", H() * H() + k(2) * H());
    EXPECT_TRUE(r.den().is_constant());
    EXPECT_TRUE(rf_equal(r, RatFunc(k(1))));
}

TEST(RfSpecialize, RemovableSingularityAtValue)
{
    RatFunc r = rf_specialize(RatFunc(X(), X()), "x", BigRational(5));
    EXPECT_TRUE(rf_equal(r, RatFunc(k(1))));
    RatFunc s = rf_specialize(RatFunc(X() * X() - k(1), X() - k(1)), "x", BigRational(1));
    EXPECT_TRUE(rf_equal(s, RatFunc(k(2))));
}

TEST(RfSpecialize, BoundaryOfDoubleIdentity)
{
    DoubleIdentity d = build_double_identity(IdentityVariant::plus);
    RatFunc p = rf_specialize(RatFunc(d.G.first), "x", BigRational(0));
    RatFunc q = rf_specialize(RatFunc(d.G.second), "x", BigRational(0));
    auto e = expected_plus_boundary(default_u());
    EXPECT_TRUE(rf_equal(p, RatFunc(e.first.to_multipoly())));
    EXPECT_TRUE(rf_equal(q, RatFunc(e.second.to_multipoly())));
}

TEST(RfSpecialize, Errors)
{
    EXPECT_THROW(rf_specialize(RatFunc(X()), "z", BigRational(1)), ForeignVariable);
    EXPECT_THROW(rf_specialize(RatFunc(k(1), X() * X()), "x", BigRational(0)), DivisionByZero);
}

TEST(RatFuncText, Format) { EXPECT_EQ(to_string(RatFunc(X() + k(1), Y())), "(x + 1)/(y)"); }
