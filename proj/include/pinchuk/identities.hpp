#ifndef PINCHUK_IDENTITIES_HPP
#define PINCHUK_IDENTITIES_HPP

#include <array>
#include <string>
#include <utility>

#include "pinchuk/asymptotic.hpp"
#include "pinchuk/errors.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/ratfunc.hpp"
#include "pinchuk/unipoly.hpp"

namespace pinchuk {

enum class IdentityVariant { plus, minus };

inline const char* to_string(IdentityVariant v) { return v == IdentityVariant::plus ? "plus" : "minus"; }

/// F(R(x, y)) = G(x, y) with R rational and G polynomial.
struct DoubleIdentity {
    IdentityVariant variant;
    std::pair<RatFunc, RatFunc> R;
    MultiPoly t_R;  // t o R
    MultiPoly h_R;  // h o R
    MultiPoly f_R;  // f o R
    std::pair<MultiPoly, MultiPoly> G;
    std::pair<UniPoly, UniPoly> boundary;  // G(0, y)

    RatBindings bindings() const { return {{"x", R.first}, {"y", R.second}}; }
};

/// plus: R = (x^-2, y x^3 + x^2); minus: R = (-x^-2, y x^3 - x^2).
inline std::pair<RatFunc, RatFunc> identity_substitution(IdentityVariant v)
{
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    BigRational sgn = v == IdentityVariant::plus ? 1 : -1;
    RatFunc first(MultiPoly::constant(sgn).with_variables({"x", "y"}), x * x);
    RatFunc second((y * x * x * x + sgn * (x * x)).with_variables({"x", "y"}));
    return {first, second};
}

namespace detail {

inline MultiPoly polynomial_candidate(const RatFunc& r, const std::string& name)
{
    auto p = r.as_polynomial();
    if (!p) throw NotPolynomial(name + " o R is not a polynomial");
    return p->with_variables({"x", "y"});
}

inline void certify(const RatFunc& r, const MultiPoly& candidate, const std::string& name)
{
    if (!rf_equal(r, RatFunc(candidate))) throw NotPolynomial(name + " o R differs from its polynomial candidate");
}

}  // namespace detail

/// Generator closed forms of the plus variant.
inline std::array<MultiPoly, 3> plus_closed_forms()
{
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y"), one = MultiPoly::constant(1);
    MultiPoly s = x + y;
    return {(x * y).with_variables({"x", "y"}), (s * y).with_variables({"x", "y"}),
            (s * s * (y * y + x * y + one)).with_variables({"x", "y"})};
}

inline DoubleIdentity build_double_identity(IdentityVariant v, const PinchukMap& m)
{
    DoubleIdentity d;
    d.variant = v;
    d.R = identity_substitution(v);
    RatBindings rb = d.bindings();
    RatFunc t = rf_substitute(m.t, rb), h = rf_substitute(m.h, rb), f = rf_substitute(m.f, rb);

    if (v == IdentityVariant::plus) {
        auto closed = plus_closed_forms();
        d.t_R = closed[0];
        d.h_R = closed[1];
        d.f_R = closed[2];
    } else {
        d.t_R = detail::polynomial_candidate(t, "t");
        d.h_R = detail::polynomial_candidate(h, "h");
        d.f_R = detail::polynomial_candidate(f, "f");
    }
    detail::certify(t, d.t_R, "t");
    detail::certify(h, d.h_R, "h");
    detail::certify(f, d.f_R, "f");

    d.G.first = (d.f_R + d.h_R).with_variables({"x", "y"});
    d.G.second = substitute(q_template(m.u), {{"t", d.t_R}, {"h", d.h_R}, {"f", d.f_R}}).with_variables({"x", "y"});
    detail::certify(rf_substitute(m.P, rb), d.G.first, "P");
    detail::certify(rf_substitute(m.Q, rb), d.G.second, "Q");

    MultiPoly zero = MultiPoly::constant(0);
    d.boundary = {UniPoly::from_multipoly(substitute(d.G.first, {{"x", zero}}).trimmed(), "y"),
                  UniPoly::from_multipoly(substitute(d.G.second, {{"x", zero}}).trimmed(), "y")};
    return d;
}

inline DoubleIdentity build_double_identity(IdentityVariant v) { return build_double_identity(v, default_map()); }

/// (y^4 + 2y^2, -u(y^4 + y^2, y^2)).
inline std::pair<UniPoly, UniPoly> expected_plus_boundary(const MultiPoly& u)
{
    MultiPoly y = MultiPoly::variable("y");
    MultiPoly y2 = y * y, y4 = y2 * y2;
    MultiPoly p = y4 + BigRational(2) * y2;
    MultiPoly q = -substitute(u, {{"f", y4 + y2}, {"h", y2}});
    return {UniPoly::from_multipoly(p, "y"), UniPoly::from_multipoly(q, "y")};
}

struct CoverageRecord {
    UniPoly h_of_y;         // h o R at x = 0
    int h_sign = 0;         // +1 if h = y^2, -1 if h = -y^2, else 0
    bool matches_h_form = false;
    bool even = false;
    std::pair<BigRational, BigRational> fold_point;  // boundary at y = 0
    bool fold_at_origin = false;

    bool holds() const { return h_sign != 0 && matches_h_form && even && fold_at_origin; }
};

/// Compares the boundary with the h-form along h = h_R(0, y). A sign +1 means
/// only h >= 0 is reached, each point twice except the fold at y = 0.
inline CoverageRecord coverage_check(const DoubleIdentity& d, const MultiPoly& u)
{
    CoverageRecord c;
    c.h_of_y = UniPoly::from_multipoly(substitute(d.h_R, {{"x", MultiPoly::constant(0)}}).trimmed(), "y");
    UniPoly y2 = UniPoly::monomial("y", 2);
    if (c.h_of_y == y2) c.h_sign = 1;
    else if (c.h_of_y == y2 * BigRational(-1)) c.h_sign = -1;

    CurveParam hf = h_form(u);
    c.matches_h_form = hf.p_of.compose(c.h_of_y) == d.boundary.first && hf.q_of.compose(c.h_of_y) == d.boundary.second;
    UniPoly neg("y", {BigRational(0), BigRational(-1)});
    c.even = d.boundary.first.compose(neg) == d.boundary.first && d.boundary.second.compose(neg) == d.boundary.second;
    c.fold_point = {d.boundary.first(BigRational(0)), d.boundary.second(BigRational(0))};
    c.fold_at_origin = c.fold_point.first == 0 && c.fold_point.second == 0;
    return c;
}

inline CoverageRecord coverage_check(const DoubleIdentity& d) { return coverage_check(d, default_u()); }

}  // namespace pinchuk

#endif  // PINCHUK_IDENTITIES_HPP
