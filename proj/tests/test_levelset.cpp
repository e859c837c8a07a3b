#include <gtest/gtest.h>

#include <cstdlib>
#include <vector>

#include "pinchuk/asymptotic.hpp"
#include "pinchuk/errors.hpp"
#include "pinchuk/levelset.hpp"
#include "pinchuk/verify.hpp"
#include "support.hpp"

using namespace pinchuk;

namespace {

const PinchukMap& map25()
{
    static const PinchukMap m = default_map();
    return m;
}

MultiPoly H() { return MultiPoly::variable("h"); }

}  // namespace

TEST(LevelSetIdentities, Default) { EXPECT_TRUE(check_levelset_identities(level_set_param(), map25())); }

TEST(LevelSetIdentities, FlippedYFails)
{
    LevelSetParam ls = level_set_param();
    ls.y_of = RatFunc(-ls.y_of.num(), ls.y_of.den());
    EXPECT_FALSE(check_levelset_identities(ls, map25()));
}

TEST(LevelSetIdentities, SpecializedPoint)
{
    LevelSetParam ls = level_set_param();
    Point at{{"c", BigRational(3)}, {"h", BigRational(2)}};
    BigRational x = rf_evaluate(ls.x_of, at), y = rf_evaluate(ls.y_of, at);
    EXPECT_EQ(x, make_rational(3, 25));
    EXPECT_EQ(y, -75);
    EXPECT_EQ(evaluate(map25().P, {{"x", x}, {"y", y}}), 3);
}

TEST(PoleAndLimit, Analysis)
{
    PoleLimitAnalysis a = pole_and_limit_analysis(map25());
    EXPECT_EQ(a.pole_order, -2);
    MultiPoly one = MultiPoly::constant(1);
    EXPECT_TRUE(rf_equal(a.pole_coefficient, RatFunc(-(H() * H() * H() * H()) * (H() + one) * (H() + one))));
    MultiPoly expected = -substitute(map25().u, {{"f", H() * H() + H()}, {"h", H()}});
    EXPECT_TRUE(rf_equal(a.limit, RatFunc(expected)));
    EXPECT_TRUE(rf_equal(a.f_limit, RatFunc(H() * H() + H())));
    EXPECT_TRUE(a.t_limit.num().is_zero());
}

TEST(PoleAndLimit, NumericApproachToPole)
{
    PoleLimitAnalysis a = pole_and_limit_analysis(map25());
    std::vector<BigRational> gaps;
    for (long n : {10L, 100L, 1000L}) {
        BigRational d = make_rational(1, n);
        BigRational v = rf_evaluate(a.q_composed, {{"h", BigRational(2)}, {"c", BigRational(2 + d)}}) * d * d;
        gaps.push_back(abs(v + 144));
    }
    EXPECT_EQ(to_decimal(gaps[0], 2), "33.36");
    EXPECT_GT(gaps[0], gaps[1]);
    EXPECT_GT(gaps[1], gaps[2]);
    EXPECT_LT(gaps[2], make_rational(1, 2));
}

TEST(FiberCount, FrozenPoints)
{
    FiberReport a = fiber_count(3, -2676, map25());
    EXPECT_EQ(a.count, 2u);
    EXPECT_EQ(a.classification, FiberClass::off_curve);
    FiberReport b = fiber_count(3, make_rational(-4235, 4), map25());
    EXPECT_EQ(b.count, 1u);
    EXPECT_EQ(b.classification, FiberClass::on_curve);
    FiberReport c = fiber_count(-2, 0, map25());
    EXPECT_EQ(c.count, 2u);
    EXPECT_EQ(c.classification, FiberClass::off_curve);
}

TEST(FiberCount, KnownPreimageRoots)
{
    auto roots = fiber_root_intervals(3, -2676, map25());
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_TRUE(roots[0].lo < 2 && 2 <= roots[0].hi);
    LevelFiberEquation e = level_fiber_equation(3, -2676, map25());
    RootInterval r = refine_root(squarefree_part(e.g), roots[1], make_rational(1, 1000000));
    EXPECT_GT(r.hi, make_rational(588, 100));
    EXPECT_LT(r.lo, make_rational(589, 100));
}

TEST(FiberCount, SpecialLevelRejected)
{
    EXPECT_THROW(fiber_count(0, 5, map25()), SpecialLevel);
    EXPECT_THROW(fiber_count(-1, 5, map25()), SpecialLevel);
}

TEST(FiberCount, RandomOffCurvePointsHaveTwo)
{
    testkit::Rng rng(53);
    ImplicitCurve b = build_implicit();
    int done = 0;
    while (done < 20) {
        BigRational p = rng.rational(40, 7), q = rng.rational(2000, 5);
        if (p == 0 || p == -1 || evaluate_b(b, p, q) == 0) continue;
        EXPECT_EQ(fiber_count(p, q, map25()).count, 2u) << to_string(p) << " " << to_string(q);
        ++done;
    }
}

TEST(FiberCount, RandomCurvePointsHaveOne)
{
    testkit::Rng rng(59);
    CurveParam s = s_form();
    int done = 0;
    while (done < 10) {
        BigRational t = rng.rational(25, 8);
        auto [p, q] = curve_point(s, t);
        if (p == 0 || p == -1) continue;
        FiberReport r = fiber_count(p, q, map25());
        EXPECT_EQ(r.count, 1u) << "s=" << to_string(t);
        EXPECT_EQ(r.classification, FiberClass::on_curve);
        ++done;
    }
}

TEST(FiberCount, BackSubstitutionReproducesTarget)
{
    const PinchukMap& m = map25();
    const BigRational tolerance = make_rational(1, 1000000000);
    for (auto [p, q] : random_off_curve_points(fiber_seed, 4)) {
        LevelFiberEquation e = level_fiber_equation(p, q, m);
        UniPoly sf = squarefree_part(e.g);
        LevelSetParam ls = level_set_param(MultiPoly::constant(p));
        for (RootInterval iv : isolate_real_roots(sf)) {
            iv = refine_root(sf, iv, BigRational(1) / BigRational(mpz_class("1000000000000000000000000000000")));
            EXPECT_EQ(sturm_count(e.poles, iv.lo, iv.hi), 0u);
            BigRational h = iv.hi;
            Point at{{"h", h}};
            Point xy{{"x", rf_evaluate(ls.x_of, at)}, {"y", rf_evaluate(ls.y_of, at)}};
            EXPECT_LT(abs(evaluate(m.P, xy) - p), tolerance);
            EXPECT_LT(abs(evaluate(m.Q, xy) - q), tolerance);
        }
    }
}

TEST(SpecialProbe, NoPreimagePoints)
{
    FiberReport a = special_fiber_probe(0, 0, map25());
    EXPECT_FALSE(a.inconclusive);
    EXPECT_EQ(a.count, 0u);
    EXPECT_EQ(a.classification, FiberClass::special_no_preimage);
    FiberReport b = special_fiber_probe(-1, make_rational(-163, 4), map25());
    EXPECT_FALSE(b.inconclusive);
    EXPECT_EQ(b.count, 0u);
    EXPECT_EQ(b.classification, FiberClass::special_no_preimage);
}

TEST(SpecialProbe, OnCurvePointAtZeroLevel)
{
    FiberReport r = special_fiber_probe(0, 208, map25());
    EXPECT_FALSE(r.inconclusive);
    EXPECT_EQ(r.count, 1u);
    EXPECT_EQ(r.classification, FiberClass::on_curve);
}

TEST(SpecialProbe, RejectsGenericLevel) { EXPECT_THROW(special_fiber_probe(3, 0, map25()), SpecialLevel); }

TEST(SpecialProbe, SolverAgreesWithParametrizedCount)
{
    const PinchukMap& m = map25();
    BoxSolveResult s = solve_polynomial_system(m.P - MultiPoly::constant(3), m.Q + MultiPoly::constant(2676));
    EXPECT_TRUE(s.conclusive());
    EXPECT_EQ(s.certified, 2u);
}

TEST(SpecialProbe, DepthLimitIsReported)
{
    FiberReport r = special_fiber_probe(0, 1, map25(), 0);
    if (r.inconclusive) {
        EXPECT_GT(r.unresolved_boxes, 0u);
        EXPECT_NE(to_string(r).find("status=inconclusive"), std::string::npos);
    }
    FiberReport full = special_fiber_probe(0, 1, map25());
    EXPECT_FALSE(full.inconclusive);
    EXPECT_GE(full.count, r.count);
}

TEST(FiberReportText, Format)
{
    EXPECT_EQ(to_string(fiber_query(0, 0)), "fiber P=0 Q=0 method=special count=0 class=special_no_preimage");
    EXPECT_EQ(to_string(fiber_query(3, -2676)), "fiber P=3 Q=-2676 method=parametrized count=2 class=off_curve");
}
