#ifndef PINCHUK_LEVELSET_HPP
#define PINCHUK_LEVELSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "pinchuk/asymptotic.hpp"
#include "pinchuk/box_solver.hpp"
#include "pinchuk/errors.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/ratfunc.hpp"
#include "pinchuk/unipoly.hpp"

namespace pinchuk {

/// Rational parametrization of the level set P = c by the value of h:
///   x = (c - h)(h + 1) / (c - 2h - h^2)^2
///   y = (c - 2h - h^2)^2 (c - h - h^2) / (c - h)^2
struct LevelSetParam {
    RatFunc x_of;
    RatFunc y_of;

    RatBindings bindings() const { return {{"x", x_of}, {"y", y_of}}; }
};

inline LevelSetParam level_set_param(const MultiPoly& c)
{
    MultiPoly h = MultiPoly::variable("h"), one = MultiPoly::constant(1);
    MultiPoly d1 = c - BigRational(2) * h - h * h;
    return {RatFunc((c - h) * (h + one), d1 * d1), RatFunc(d1 * d1 * (c - h - h * h), (c - h) * (c - h))};
}

inline LevelSetParam level_set_param() { return level_set_param(MultiPoly::variable("c")); }

inline bool check_levelset_identities(const LevelSetParam& ls, const PinchukMap& m)
{
    RatFunc p = rf_substitute(m.P, ls.bindings());
    RatFunc h = rf_substitute(m.h, ls.bindings());
    return rf_equal(p, RatFunc(MultiPoly::variable("c"))) && rf_equal(h, RatFunc(MultiPoly::variable("h")));
}

inline bool check_levelset_identities() { return check_levelset_identities(level_set_param(), default_map()); }

struct PoleLimitAnalysis {
    RatFunc q_composed;         // Q(x(h), y(h)) in h, c, unreduced
    int pole_order = 0;         // order of Q along c = h
    RatFunc pole_coefficient;   // leading coefficient of (c - h)^pole_order
    RatFunc limit;              // Q restricted to c = h^2 + 2h
    RatFunc t_limit;            // t restricted to c = h^2 + 2h
    RatFunc f_limit;            // f restricted to c = h^2 + 2h
    RatFunc xy_limit;           // x y restricted to c = h^2 + 2h
};

/// Pole of Q at c = h, finite limit at c = h^2 + 2h. Throws AnalysisFailure
/// naming the sub-check that fails.
inline PoleLimitAnalysis pole_and_limit_analysis(const PinchukMap& m)
{
    PoleLimitAnalysis a;
    LevelSetParam ls = level_set_param();
    MultiPoly h = MultiPoly::variable("h"), c = MultiPoly::variable("c"), one = MultiPoly::constant(1);
    a.q_composed = rf_substitute(m.Q, ls.bindings());

    try {
        exact_divide(a.q_composed.den(), (c - h) * (c - h));
    } catch (const InexactDivision&) {
        throw AnalysisFailure("pole: denominator of Q(x(h), y(h)) lacks the factor (c - h)^2");
    }
    LaurentLeading lead = laurent_leading(a.q_composed, "c", h);
    a.pole_order = lead.order;
    a.pole_coefficient = lead.coefficient;
    MultiPoly expected_pole = -(h * h * h * h) * (h + one) * (h + one);
    if (a.pole_order != -2 || !rf_equal(a.pole_coefficient, RatFunc(expected_pole))) {
        throw AnalysisFailure("pole: Q does not behave like -h^4 (h+1)^2 / (c - h)^2 near c = h");
    }

    MultiPoly curve = h * h + BigRational(2) * h;
    a.limit = rf_specialize(a.q_composed, "c", curve);
    MultiPoly expected_limit = -substitute(m.u, {{"f", h * h + h}, {"h", h}});
    if (!rf_equal(a.limit, RatFunc(expected_limit))) {
        throw AnalysisFailure("limit: Q at c = h^2 + 2h differs from -u(h^2 + h, h)");
    }

    a.t_limit = rf_specialize(rf_substitute(m.t, ls.bindings()), "c", curve);
    a.f_limit = rf_specialize(rf_substitute(m.f, ls.bindings()), "c", curve);
    a.xy_limit = rf_specialize(ls.x_of * ls.y_of, "c", curve);
    if (!a.t_limit.num().is_zero()) throw AnalysisFailure("limit: t does not vanish at c = h^2 + 2h");
    if (!rf_equal(a.f_limit, RatFunc(h * h + h))) throw AnalysisFailure("limit: f differs from h^2 + h");
    if (!rf_equal(a.xy_limit, RatFunc(one))) throw AnalysisFailure("limit: xy does not tend to 1");
    return a;
}

inline PoleLimitAnalysis pole_and_limit_analysis() { return pole_and_limit_analysis(default_map()); }

enum class FiberMethod { parametrized, special };
enum class FiberClass { off_curve, on_curve, special_no_preimage };

struct FiberReport {
    BigRational p;
    BigRational q;
    FiberMethod method;
    unsigned count = 0;
    FiberClass classification;
    bool inconclusive = false;
    unsigned unresolved_boxes = 0;
};

inline const char* to_string(FiberMethod m) { return m == FiberMethod::parametrized ? "parametrized" : "special"; }

inline const char* to_string(FiberClass c)
{
    switch (c) {
    case FiberClass::off_curve: return "off_curve";
    case FiberClass::on_curve: return "on_curve";
    case FiberClass::special_no_preimage: return "special_no_preimage";
    }
    return "?";
}

inline std::string to_string(const FiberReport& r)
{
    std::string s = "fiber P=" + to_string(r.p) + " Q=" + to_string(r.q) + " method=" + to_string(r.method) +
                    " count=" + std::to_string(r.count) + " class=" + to_string(r.classification);
    if (r.inconclusive) s += " status=inconclusive unresolved=" + std::to_string(r.unresolved_boxes);
    return s;
}

inline bool is_special_point(const BigRational& p, const BigRational& q)
{
    return (p == 0 && q == 0) || (p == -1 && q == make_rational(-163, 4));
}

inline FiberClass classify(const BigRational& p, const BigRational& q)
{
    if (is_special_point(p, q)) return FiberClass::special_no_preimage;
    ImplicitCurve b = build_implicit();
    if (evaluate_b(b, p, q) == 0 && on_real_curve(s_form(), p, q)) return FiberClass::on_curve;
    return FiberClass::off_curve;
}

/// Q - q restricted to the level set P = p, as a polynomial in h whose real
/// roots are exactly the fiber. Pole values of h are removed only after
/// confirming they are common factors.
struct LevelFiberEquation {
    UniPoly g;      // cleared numerator with pole factors divided out
    UniPoly poles;  // (p - 2h - h^2)(p - h)
};

inline LevelFiberEquation level_fiber_equation(const BigRational& p, const BigRational& q, const PinchukMap& m)
{
    if (p == 0 || p == -1) {
        throw SpecialLevel("level P=" + to_string(p) + " needs special_fiber_probe");
    }
    LevelSetParam ls = level_set_param(MultiPoly::constant(p));
    RatFunc composed = rf_substitute(m.Q, ls.bindings());
    UniPoly num = UniPoly::from_multipoly(composed.num(), "h");
    UniPoly den = UniPoly::from_multipoly(composed.den(), "h");
    UniPoly g = num - den * q;
    if (g.is_zero()) throw AnalysisFailure("Q is constant on the level set");

    UniPoly h("h", {BigRational(0), BigRational(1)});
    UniPoly pc = UniPoly::constant("h", p);
    UniPoly poles = (pc - h * BigRational(2) - h * h) * (pc - h);
    for (UniPoly common = uni_gcd(g, poles); common.size_degree() > 0; common = uni_gcd(g, poles)) {
        g = exact_quotient(g, common);
    }
    return {g, poles};
}

/// Isolating intervals for the values of h on the fiber.
inline std::vector<RootInterval> fiber_root_intervals(const BigRational& p, const BigRational& q, const PinchukMap& m)
{
    return isolate_real_roots(squarefree_part(level_fiber_equation(p, q, m).g));
}

/// Number of distinct real points of the level set P = p where Q = q.
inline FiberReport fiber_count(const BigRational& p, const BigRational& q, const PinchukMap& m)
{
    LevelFiberEquation e = level_fiber_equation(p, q, m);
    return {p, q, FiberMethod::parametrized, sturm_count(e.g), classify(p, q)};
}

inline FiberReport fiber_count(const BigRational& p, const BigRational& q) { return fiber_count(p, q, default_map()); }

inline constexpr unsigned default_probe_depth = 64;

/// Levels P = -1 and P = 0: solve {P = p, Q = q} via resultant projections
/// and certified box exclusion.
inline FiberReport special_fiber_probe(const BigRational& p, const BigRational& q, const PinchukMap& m,
                                       unsigned depth_limit = default_probe_depth)
{
    if (p != 0 && p != -1) throw SpecialLevel("special_fiber_probe handles only P=0 and P=-1");
    MultiPoly f1 = m.P - MultiPoly::constant(p);
    MultiPoly f2 = m.Q - MultiPoly::constant(q);
    BoxSolveResult s = solve_polynomial_system(f1, f2, depth_limit);
    FiberReport r{p, q, FiberMethod::special, s.certified, classify(p, q)};
    r.inconclusive = !s.conclusive();
    r.unresolved_boxes = s.unresolved;
    return r;
}

inline FiberReport special_fiber_probe(const BigRational& p, const BigRational& q,
                                       unsigned depth_limit = default_probe_depth)
{
    return special_fiber_probe(p, q, default_map(), depth_limit);
}

/// Dispatches to the method that applies at level p.
inline FiberReport fiber_query(const BigRational& p, const BigRational& q, const PinchukMap& m)
{
    if (p == 0 || p == -1) return special_fiber_probe(p, q, m);
    return fiber_count(p, q, m);
}

inline FiberReport fiber_query(const BigRational& p, const BigRational& q) { return fiber_query(p, q, default_map()); }

}  // namespace pinchuk

#endif  // PINCHUK_LEVELSET_HPP
