#ifndef PINCHUK_ASYMPTOTIC_HPP
#define PINCHUK_ASYMPTOTIC_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/multipoly.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/polytext.hpp"
#include "pinchuk/unipoly.hpp"

namespace pinchuk {

enum class ParamForm { s, h };

/// Polynomial parametrization (P(param), Q(param)) of the asymptotic curve.
struct CurveParam {
    UniPoly p_of;
    UniPoly q_of;
    ParamForm form;

    std::string parameter_name() const { return form == ParamForm::s ? "s" : "h"; }
};

/// P(s) = s^2 - 1, Q(s) = -75 s^5 + 345/4 s^4 - 29 s^3 + 117/2 s^2 - 163/4.
inline CurveParam s_form()
{
    return {UniPoly("s", {BigRational(-1), BigRational(0), BigRational(1)}),
            UniPoly("s", {make_rational(-163, 4), BigRational(0), make_rational(117, 2), BigRational(-29),
                          make_rational(345, 4), BigRational(-75)}),
            ParamForm::s};
}

/// (h^2 + 2h, -u(h^2 + h, h)) for the given auxiliary polynomial.
inline CurveParam h_form(const MultiPoly& u)
{
    MultiPoly h = MultiPoly::variable("h");
    MultiPoly p = h * h + BigRational(2) * h;
    MultiPoly q = -substitute(u, {{"f", h * h + h}, {"h", h}});
    return {UniPoly::from_multipoly(p, "h"), UniPoly::from_multipoly(q, "h"), ParamForm::h};
}

inline CurveParam h_form() { return h_form(default_u()); }

inline std::pair<BigRational, BigRational> curve_point(const CurveParam& c, const BigRational& param)
{
    return {c.p_of(param), c.q_of(param)};
}

inline std::pair<BigRational, BigRational> curve_point(const BigRational& param, ParamForm form)
{
    return curve_point(form == ParamForm::s ? s_form() : h_form(), param);
}

/// s-form under s = h + 1 reproduces the h-form, which in turn must match
/// the one built from `u`.
inline bool check_parametrization_consistency(const CurveParam& s, const CurveParam& h, const MultiPoly& u)
{
    UniPoly shift("h", {BigRational(1), BigRational(1)});
    CurveParam rebuilt = h_form(u);
    return s.p_of.compose(shift) == h.p_of && s.q_of.compose(shift) == h.q_of && h.p_of == rebuilt.p_of &&
           h.q_of == rebuilt.q_of;
}

inline bool check_parametrization_consistency()
{
    return check_parametrization_consistency(s_form(), h_form(), default_u());
}

/// Zero set of B(P, Q) = (Q - L(P))^2 - R(P).
struct ImplicitCurve {
    MultiPoly B;  // in P, Q, expanded
    UniPoly L;    // 345/4 P^2 + 231 P + 104
    UniPoly R;    // (P + 1)^3 (75 P + 104)^2
};

inline ImplicitCurve make_implicit(const UniPoly& L, const UniPoly& R)
{
    MultiPoly q = MultiPoly::variable("Q");
    MultiPoly d = q - L.to_multipoly();
    return {(d * d - R.to_multipoly()).with_variables({"P", "Q"}), L, R};
}

inline ImplicitCurve build_implicit()
{
    UniPoly L("P", {BigRational(104), BigRational(231), make_rational(345, 4)});
    UniPoly p1("P", {BigRational(1), BigRational(1)});
    UniPoly lin("P", {BigRational(104), BigRational(75)});
    return make_implicit(L, p1 * p1 * p1 * lin * lin);
}

/// B(P(s), Q(s)) is the zero polynomial.
inline bool residual_check(const ImplicitCurve& c, const CurveParam& param)
{
    MultiPoly composed = substitute(c.B, {{"P", param.p_of.to_multipoly()}, {"Q", param.q_of.to_multipoly()}});
    return composed.is_zero();
}

inline bool residual_check() { return residual_check(build_implicit(), s_form()); }

inline BigRational evaluate_b(const ImplicitCurve& c, const BigRational& p, const BigRational& q)
{
    return evaluate(c.B, {{"P", p}, {"Q", q}});
}

struct IrreducibilityCertificate {
    BigRational q2_coefficient;
    UniPoly discriminant;
    bool discriminant_matches_4r = false;
    std::vector<SquarefreeFactor> factors;
    std::vector<SquarefreeFactor> odd_factors;
};

/// B monic of degree 2 in Q excludes factors in P alone; a discriminant with
/// a factor of odd multiplicity is not a square, which excludes two factors
/// linear in Q. Throws CertificateFailure naming the fact that fails.
inline IrreducibilityCertificate irreducibility_certificate(const ImplicitCurve& c)
{
    IrreducibilityCertificate cert;
    Degree dq = c.B.degree_in("Q");
    if (!(dq == 2u)) throw CertificateFailure("B is not quadratic in Q (degree " + dq.to_string() + ")");
    auto coeffs = c.B.coefficients_in("Q");
    UniPoly a = UniPoly::from_multipoly(coeffs[2], "P");
    UniPoly b = UniPoly::from_multipoly(coeffs[1], "P");
    UniPoly c0 = UniPoly::from_multipoly(coeffs[0], "P");
    if (a.size_degree() != 0) throw CertificateFailure("coefficient of Q^2 depends on P");
    cert.q2_coefficient = a.leading_coefficient();
    if (cert.q2_coefficient != 1) {
        throw CertificateFailure("coefficient of Q^2 is " + to_string(cert.q2_coefficient) + ", not 1");
    }
    cert.discriminant = b * b - a * c0 * BigRational(4);
    cert.discriminant_matches_4r = cert.discriminant == c.R * BigRational(4);
    if (!cert.discriminant_matches_4r) throw CertificateFailure("discriminant in Q differs from 4R");
    cert.factors = squarefree_decomp(cert.discriminant);
    for (const auto& f : cert.factors) {
        if (f.multiplicity % 2 == 1) cert.odd_factors.push_back(f);
    }
    if (cert.odd_factors.empty()) {
        throw CertificateFailure("every square-free factor of the discriminant has even multiplicity");
    }
    return cert;
}

struct NotablePoint {
    BigRational p;
    BigRational q;
    bool on_real_curve;
    bool gradient_vanishes;
};

struct ClosureAnalysis {
    std::vector<NotablePoint> singular_points;  // all real solutions of B = B_P = B_Q = 0
    bool unique_singular_on_curve = false;
};

/// Whether (p, q) is attained by the s-form for some real s.
inline bool on_real_curve(const CurveParam& s, const BigRational& p, const BigRational& q)
{
    UniPoly a = s.p_of - UniPoly::constant("s", p);
    UniPoly b = s.q_of - UniPoly::constant("s", q);
    if (a.is_zero() || b.is_zero()) return false;
    UniPoly g = uni_gcd(a, b);
    return g.size_degree() > 0 && sturm_count(g) > 0;
}

/// B_Q = 2(Q - L) forces Q = L(P) on the singular locus; then B = -R(P), so
/// singular points sit over the roots of R.
inline ClosureAnalysis closure_analysis(const ImplicitCurve& c, const CurveParam& s)
{
    ClosureAnalysis out;
    MultiPoly bp = diff(c.B, "P"), bq = diff(c.B, "Q");
    for (const auto& sf : squarefree_decomp(c.R)) {
        if (sf.factor.size_degree() != 1) {
            throw AnalysisFailure("closure analysis expects R to split into rational linear factors");
        }
        BigRational p = -sf.factor.coefficient(0) / sf.factor.coefficient(1);
        BigRational q = c.L(p);
        Point at{{"P", p}, {"Q", q}};
        NotablePoint np{p, q, on_real_curve(s, p, q), evaluate(bp, at) == 0 && evaluate(bq, at) == 0};
        if (evaluate(c.B, at) != 0) throw AnalysisFailure("point over a root of R is not on B = 0");
        out.singular_points.push_back(np);
    }
    std::sort(out.singular_points.begin(), out.singular_points.end(),
              [](const NotablePoint& a, const NotablePoint& b) { return a.p < b.p; });
    unsigned on_curve = 0;
    for (const auto& np : out.singular_points) {
        if (np.on_real_curve && np.gradient_vanishes) ++on_curve;
    }
    out.unique_singular_on_curve = on_curve == 1;
    return out;
}

inline ClosureAnalysis closure_analysis() { return closure_analysis(build_implicit(), s_form()); }

/// Number of real s with P(s) = c.
inline unsigned vertical_line_count(const CurveParam& s, const BigRational& c)
{
    return sturm_count(s.p_of - UniPoly::constant("s", c));
}

}  // namespace pinchuk

#endif  // PINCHUK_ASYMPTOTIC_HPP
