#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "pinchuk/asymptotic.hpp"
#include "pinchuk/errors.hpp"
#include "pinchuk/polytext.hpp"
#include "support.hpp"

using namespace pinchuk;

using PQ = std::pair<BigRational, BigRational>;

TEST(CurvePoint, SpecialPoints)
{
    EXPECT_EQ(curve_point(BigRational(0), ParamForm::s), PQ(-1, make_rational(-163, 4)));
    EXPECT_EQ(curve_point(BigRational(1), ParamForm::s), PQ(0, 0));
    EXPECT_EQ(curve_point(BigRational(-1), ParamForm::s), PQ(0, 208));
}

TEST(CurvePoint, FrozenValues)
{
    EXPECT_EQ(curve_point(BigRational(2), ParamForm::s), PQ(3, make_rational(-4235, 4)));
    EXPECT_EQ(curve_point(BigRational(-2), ParamForm::s), PQ(3, make_rational(16821, 4)));
    EXPECT_EQ(curve_point(BigRational(1), ParamForm::h), PQ(3, make_rational(-4235, 4)));
    MultiPoly u = default_u();
    EXPECT_EQ(-evaluate(u, {{"f", BigRational(2)}, {"h", BigRational(1)}}), make_rational(-4235, 4));
}

TEST(Consistency, DefaultForms) { EXPECT_TRUE(check_parametrization_consistency()); }

TEST(Consistency, PerturbedSFormFails)
{
    CurveParam s = s_form();
    auto c = s.q_of.coefficients();
    c[3] += 1;
    s.q_of = UniPoly("s", c);
    EXPECT_FALSE(check_parametrization_consistency(s, h_form(), default_u()));
}

TEST(Consistency, AlternateAuxiliaryGivesDifferentCurve)
{
    CurveParam alt = h_form(alternate_u());
    EXPECT_FALSE(alt.q_of == h_form().q_of);
    EXPECT_FALSE(check_parametrization_consistency(s_form(), h_form(), alternate_u()));
}

TEST(Implicit, ResidualVanishes) { EXPECT_TRUE(residual_check()); }

TEST(Implicit, PointValues)
{
    ImplicitCurve b = build_implicit();
    EXPECT_EQ(evaluate_b(b, 3, make_rational(-4235, 4)), 0);
    EXPECT_NE(evaluate_b(b, 3, -2676), 0);
    EXPECT_EQ(b.B.coefficient(Monomial{{"Q", 2}}), 1);
}

TEST(Implicit, QuadraticCoefficientIsOne)
{
    ImplicitCurve b = build_implicit();
    EXPECT_EQ(b.B.degree_in("Q"), Degree(2));
    EXPECT_EQ(b.L(BigRational(-1)), make_rational(-163, 4));
}

TEST(Irreducibility, DefaultCertificate)
{
    auto cert = irreducibility_certificate(build_implicit());
    EXPECT_EQ(cert.q2_coefficient, 1);
    EXPECT_TRUE(cert.discriminant_matches_4r);
    ASSERT_EQ(cert.factors.size(), 2u);
    ASSERT_EQ(cert.odd_factors.size(), 1u);
    EXPECT_EQ(cert.odd_factors[0].factor, UniPoly("P", {1, 1}));
    EXPECT_EQ(cert.odd_factors[0].multiplicity, 3u);
}

TEST(Irreducibility, DiscriminantFromExpandedCoefficients)
{
    ImplicitCurve b = build_implicit();
    auto coeffs = parse_poly(to_string(b.B), {"P", "Q"}).coefficients_in("Q");
    UniPoly c1 = UniPoly::from_multipoly(coeffs[1], "P"), c0 = UniPoly::from_multipoly(coeffs[0], "P");
    UniPoly p1("P", {1, 1}), lin("P", {104, 75});
    EXPECT_EQ(c1 * c1 - c0 * BigRational(4), p1 * p1 * p1 * lin * lin * BigRational(4));
}

TEST(Irreducibility, PerfectSquareMutationFails)
{
    ImplicitCurve b = build_implicit();
    UniPoly p1("P", {1, 1}), lin("P", {104, 75});
    ImplicitCurve square = make_implicit(b.L, p1 * p1 * lin * lin);
    EXPECT_THROW(irreducibility_certificate(square), CertificateFailure);
}

TEST(Irreducibility, NonMonicMutationFails)
{
    ImplicitCurve b = build_implicit();
    b.B = b.B * BigRational(2);
    EXPECT_THROW(irreducibility_certificate(b), CertificateFailure);
}

TEST(Closure, Points)
{
    ClosureAnalysis a = closure_analysis();
    ASSERT_EQ(a.singular_points.size(), 2u);
    const NotablePoint& extra = a.singular_points[0];
    const NotablePoint& left = a.singular_points[1];
    EXPECT_EQ(extra.p, make_rational(-104, 75));
    EXPECT_EQ(extra.q, make_rational(-18928, 375));
    EXPECT_FALSE(extra.on_real_curve);
    EXPECT_TRUE(extra.gradient_vanishes);
    EXPECT_EQ(left.p, -1);
    EXPECT_EQ(left.q, make_rational(-163, 4));
    EXPECT_TRUE(left.on_real_curve);
    EXPECT_TRUE(left.gradient_vanishes);
    EXPECT_TRUE(a.unique_singular_on_curve);
}

TEST(Closure, GradientAtLeftmostPoint)
{
    ImplicitCurve b = build_implicit();
    Point at{{"P", BigRational(-1)}, {"Q", make_rational(-163, 4)}};
    EXPECT_EQ(evaluate(diff(b.B, "P"), at), 0);
    EXPECT_EQ(evaluate(diff(b.B, "Q"), at), 0);
}

TEST(CurveProperties, RandomSamplesLieOnB)
{
    testkit::Rng rng(43);
    ImplicitCurve b = build_implicit();
    CurveParam s = s_form();
    std::set<std::pair<std::string, std::string>> seen;
    std::set<std::string> params;
    for (int i = 0; i < 200; ++i) {
        BigRational t = rng.rational(40, 11);
        auto [p, q] = curve_point(s, t);
        EXPECT_EQ(evaluate_b(b, p, q), 0);
        EXPECT_GE(p, -1);
        if (params.insert(to_string(t)).second) {
            EXPECT_TRUE(seen.insert({to_string(p), to_string(q)}).second) << "collision at s=" << to_string(t);
        }
    }
}

TEST(CurveProperties, VerticalLineCounts)
{
    CurveParam s = s_form();
    testkit::Rng rng(47);
    for (int i = 0; i < 30; ++i) {
        BigRational c = rng.rational(30, 7);
        if (c == 0 || c == -1) continue;
        EXPECT_EQ(vertical_line_count(s, c), c > -1 ? 2u : 0u) << to_string(c);
    }
    EXPECT_EQ(vertical_line_count(s, -1), 1u);
}
