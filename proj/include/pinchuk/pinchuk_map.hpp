#ifndef PINCHUK_PINCHUK_MAP_HPP
#define PINCHUK_PINCHUK_MAP_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/multipoly.hpp"
#include "pinchuk/polytext.hpp"
#include "pinchuk/unipoly.hpp"

namespace pinchuk {

/// A map F = (P, Q) of the plane built from the generators
///   t = xy - 1,  h = t(xt + 1),  f = (xt + 1)^2 (t^2 + y),  P = f + h,
///   Q = -t^2 - 6 t h (h + 1) - u(f, h).
struct PinchukMap {
    MultiPoly t;
    MultiPoly h;
    MultiPoly f;
    MultiPoly P;
    MultiPoly Q;
    MultiPoly u;  // in variables f, h
};

/// The auxiliary polynomial of the degree-25 map.
inline MultiPoly default_u()
{
    return parse_poly("75*f*h^3 + 195*f*h^2 + 170*f*h + 75/4*h^4 + 69*h^3 + 91*h^2", {"f", "h"});
}

/// The auxiliary polynomial of the degree-40 map, sign folded in: that map
/// adds (1/4) f (...) to the template, so here u = -(1/4) f (...).
inline MultiPoly alternate_u()
{
    MultiPoly inner = parse_poly("75*f^3 + 300*f^2*h + 450*f*h^2 + 276*f^2 + 828*f*h + 48*h^2 + 364*f + 48*h");
    return (MultiPoly::variable("f") * inner * make_rational(-1, 4)).with_variables({"f", "h"});
}

/// -t^2 - 6 t h (h + 1) - u, as a polynomial in t, h, f.
inline MultiPoly q_template(const MultiPoly& u)
{
    MultiPoly t = MultiPoly::variable("t"), h = MultiPoly::variable("h");
    MultiPoly one = MultiPoly::constant(1);
    return -(t * t) - BigRational(6) * t * h * (h + one) - u;
}

inline PinchukMap build_map(const MultiPoly& u)
{
    for (const auto& v : u.occurring_variables()) {
        if (v != "f" && v != "h") throw ForeignVariable("auxiliary polynomial uses variable '" + v + "'; only f, h allowed");
    }
    const std::vector<std::string> xy{"x", "y"};
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly one = MultiPoly::constant(1);

    PinchukMap m;
    m.u = u.with_variables({"f", "h"});
    m.t = (x * y - one).with_variables(xy);
    MultiPoly xt1 = x * m.t + one;
    m.h = (m.t * xt1).with_variables(xy);
    m.f = (xt1 * xt1 * (m.t * m.t + y)).with_variables(xy);
    m.P = m.f + m.h;
    m.Q = substitute(q_template(m.u), {{"t", m.t}, {"h", m.h}, {"f", m.f}}).with_variables(xy);
    return m;
}

inline PinchukMap default_map() { return build_map(default_u()); }
inline PinchukMap alternate_map() { return build_map(alternate_u()); }

/// t^2 + (t + f(13 + 15h))^2 + f^2 in x, y.
inline MultiPoly jacobian_sos(const PinchukMap& m)
{
    MultiPoly one = MultiPoly::constant(1);
    MultiPoly middle = m.t + m.f * (BigRational(13) * one + BigRational(15) * m.h);
    return m.t * m.t + middle * middle + m.f * m.f;
}

inline MultiPoly jacobian(const PinchukMap& m) { return jacobian_det(m.P, m.Q, "x", "y"); }

inline bool check_jacobian_identity(const PinchukMap& m) { return (jacobian(m) - jacobian_sos(m)).is_zero(); }

/// S with m2.Q = m1.Q + S(P). The difference of the auxiliary polynomials,
/// rewritten with f -> P - h, must be free of h.
inline UniPoly triangular_shift(const PinchukMap& m1, const PinchukMap& m2)
{
    if (!(m1.P == m2.P)) throw Error("triangular_shift: maps do not share P");
    MultiPoly diff_u = m2.u - m1.u;
    MultiPoly h = MultiPoly::variable("h"), sigma = MultiPoly::variable("P");
    MultiPoly rewritten = substitute(diff_u, {{"f", sigma - h}});
    Degree dh = rewritten.degree_in("h");
    if (!dh.is_neg_infinity() && dh.value() > 0) {
        throw NotPolynomialInP("u2 - u1 keeps h-degree " + dh.to_string() + " after f -> P - h");
    }
    UniPoly S = UniPoly::from_multipoly(-rewritten.trimmed(), "P");
    MultiPoly shifted = m1.Q + substitute(S.to_multipoly(), {{"P", m1.P}});
    if (!(shifted == m2.Q)) throw NotPolynomialInP("Q2 differs from Q1 + S(P)");
    return S;
}

/// Q + S(P) for a univariate S in the variable P.
inline MultiPoly shifted_q(const PinchukMap& m, const UniPoly& S)
{
    return m.Q + substitute(S.to_multipoly().with_variables({"P"}), {{"P", m.P}});
}

/// Shifts tried by check_degree_floor, all of degree at most 2.
inline std::vector<UniPoly> degree_floor_samples(const PinchukMap& m, std::uint64_t seed = 25, unsigned random_count = 8)
{
    std::vector<UniPoly> out;
    out.push_back(UniPoly("P", {}));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    auto rnd = [&] { return make_rational(num(rng), den(rng)); };
    for (unsigned i = 0; i < random_count; ++i) {
        BigRational lambda = rnd();
        if (lambda == 0) lambda = 1;
        out.push_back(UniPoly("P", {BigRational(0), lambda}));
        out.push_back(UniPoly("P", {rnd(), rnd(), rnd()}));
    }
    // Quadratics whose top terms are scaled to hit the leading coefficient of
    // Q or of P^2, the only places a cancellation could start.
    BigRational lq = m.Q.terms().front().coefficient;
    MultiPoly p2 = m.P * m.P;
    BigRational lp2 = p2.terms().front().coefficient;
    BigRational zero = 0, ratio = -lq / lp2, linear = -lq / m.P.terms().front().coefficient;
    out.push_back(UniPoly("P", {zero, zero, ratio}));
    out.push_back(UniPoly("P", {BigRational(-lq), zero, ratio}));
    out.push_back(UniPoly("P", {zero, linear, ratio}));
    return out;
}

/// Sampled falsification harness: no shift of degree <= 2 lowers deg Q below 25.
inline bool check_degree_floor(const PinchukMap& m, const std::vector<UniPoly>& shifts)
{
    for (const auto& S : shifts) {
        if (S.size_degree() > 2) throw DegreeError("degree floor samples must have degree <= 2");
        if (shifted_q(m, S).total_degree() < Degree(25)) return false;
    }
    return true;
}

inline bool check_degree_floor(const PinchukMap& m) { return check_degree_floor(m, degree_floor_samples(m)); }

/// H(p) = (-dp/dy, dp/dx).
inline std::pair<MultiPoly, MultiPoly> hamiltonian_field(const MultiPoly& p)
{
    return {-diff(p, "y"), diff(p, "x")};
}

/// Rate of change of q along the Hamiltonian flow of p: H(p) . grad q.
inline MultiPoly hamiltonian_derivative(const MultiPoly& p, const MultiPoly& q)
{
    auto [hx, hy] = hamiltonian_field(p);
    return hx * diff(q, "x") + hy * diff(q, "y");
}

inline bool hamiltonian_identity(const MultiPoly& p, const MultiPoly& q)
{
    return hamiltonian_derivative(p, q) == jacobian_det(p, q, "x", "y");
}

inline bool hamiltonian_identity(const PinchukMap& m) { return hamiltonian_identity(m.P, m.Q); }

}  // namespace pinchuk

#endif  // PINCHUK_PINCHUK_MAP_HPP
