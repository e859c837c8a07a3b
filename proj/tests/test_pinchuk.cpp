#include <gtest/gtest.h>

#include "pinchuk/errors.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/polytext.hpp"
#include "pinchuk/verify.hpp"
#include "support.hpp"

using namespace pinchuk;

namespace {

const PinchukMap& map25()
{
    static const PinchukMap m = default_map();
    return m;
}

const PinchukMap& map40()
{
    static const PinchukMap m = alternate_map();
    return m;
}

}  // namespace

TEST(BuildMap, Invariants)
{
    const PinchukMap& m = map25();
    EXPECT_EQ(m.P, m.f + m.h);
    EXPECT_EQ(m.P.total_degree(), Degree(10));
    EXPECT_EQ(m.Q.total_degree(), Degree(25));
    EXPECT_EQ(m.Q.degree_in("x"), Degree(15));
    EXPECT_EQ(m.Q.degree_in("y"), Degree(10));
}

TEST(BuildMap, PFactors)
{
    MultiPoly a = parse_poly("x^2*y - x + 1");
    MultiPoly b = parse_poly("x^4*y^3 - 3*x^3*y^2 + 2*x^2*y^2 + 3*x^2*y - 2*x*y - x + y");
    EXPECT_EQ(map25().P, a * b);
}

TEST(BuildMap, AlternateDegree) { EXPECT_EQ(map40().Q.total_degree(), Degree(40)); }

TEST(BuildMap, ZeroAuxiliary)
{
    PinchukMap z = build_map(MultiPoly());
    const PinchukMap& m = map25();
    MultiPoly expected = -(m.t * m.t) - MultiPoly::constant(6) * m.t * m.h * (m.h + MultiPoly::constant(1));
    EXPECT_EQ(z.Q, expected);
    EXPECT_EQ(z.P, m.P);
}

TEST(BuildMap, ForeignVariable) { EXPECT_THROW(build_map(parse_poly("f + z")), ForeignVariable); }

TEST(JacobianIdentity, DefaultMap) { EXPECT_TRUE(check_jacobian_identity(map25())); }

TEST(JacobianIdentity, AlternateMap) { EXPECT_TRUE(check_jacobian_identity(map40())); }

TEST(JacobianIdentity, FailsForZeroAuxiliary)
{
    PinchukMap z = build_map(MultiPoly());
    EXPECT_FALSE(check_jacobian_identity(z));
    Point pt{{"x", make_rational(2, 3)}, {"y", make_rational(-5, 7)}};
    EXPECT_NE(evaluate(jacobian(z), pt), evaluate(jacobian_sos(z), pt));
}

TEST(JacobianPositivity, SampledPointsArePositive)
{
    auto [ok, least] = jacobian_positivity(map25(), positivity_seed, positivity_samples);
    EXPECT_TRUE(ok);
    EXPECT_GT(least, 0);
}

TEST(TriangularShift, DegreeFortyOverDegreeTwentyFive)
{
    UniPoly S = triangular_shift(map25(), map40());
    EXPECT_EQ(S, UniPoly("P", {0, 0, 91, 69, make_rational(75, 4)}));
    EXPECT_EQ(shifted_q(map25(), S), map40().Q);
    EXPECT_EQ(shifted_q(map25(), S).total_degree(), Degree(40));
}

TEST(TriangularShift, ReversedOrientationNegates)
{
    UniPoly S = triangular_shift(map25(), map40());
    UniPoly T = triangular_shift(map40(), map25());
    EXPECT_EQ(T, S * BigRational(-1));
}

TEST(TriangularShift, SameMapIsZero) { EXPECT_TRUE(triangular_shift(map25(), map25()).is_zero()); }

TEST(TriangularShift, RejectsHDependentDifference)
{
    PinchukMap other = build_map(default_u() + parse_poly("h^3", {"f", "h"}));
    EXPECT_THROW(triangular_shift(map25(), other), NotPolynomialInP);
}

TEST(DegreeFloor, Samples)
{
    const PinchukMap& m = map25();
    EXPECT_EQ(shifted_q(m, UniPoly("P", {})).total_degree(), Degree(25));
    auto samples = degree_floor_samples(m);
    EXPECT_GE(samples.size(), 10u);
    for (const auto& S : samples) EXPECT_GE(shifted_q(m, S).total_degree(), Degree(25));
    EXPECT_TRUE(check_degree_floor(m));
    EXPECT_THROW(check_degree_floor(m, {UniPoly("P", {0, 0, 0, 1})}), DegreeError);
}

TEST(Hamiltonian, PinchukMap) { EXPECT_TRUE(hamiltonian_identity(map25())); }

TEST(Hamiltonian, IdentityMap)
{
    EXPECT_TRUE(hamiltonian_identity(MultiPoly::variable("x"), MultiPoly::variable("y")));
    EXPECT_TRUE(hamiltonian_derivative(MultiPoly::variable("x"), MultiPoly::variable("y")).is_one());
}

TEST(Hamiltonian, RandomPairs)
{
    testkit::Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        EXPECT_TRUE(hamiltonian_identity(rng.poly({"x", "y"}, 5, 6), rng.poly({"x", "y"}, 5, 6)));
    }
}

TEST(Serialization, GeneratorsRoundTrip)
{
    const PinchukMap& m = map40();
    for (const MultiPoly* p : {&m.t, &m.h, &m.f, &m.P, &m.Q, &m.u}) EXPECT_EQ(parse_poly(to_string(*p)), *p);
}
