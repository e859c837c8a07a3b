#ifndef PINCHUK_VERIFY_HPP
#define PINCHUK_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/asymptotic.hpp"
#include "pinchuk/errors.hpp"
#include "pinchuk/identities.hpp"
#include "pinchuk/levelset.hpp"
#include "pinchuk/newton.hpp"
#include "pinchuk/pinchuk_map.hpp"
#include "pinchuk/polytext.hpp"

namespace pinchuk {

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct CheckOutcome {
    CheckStatus status;
    std::string detail;
};

struct CheckResult {
    std::string name;
    CheckStatus status;
    double elapsed_ms;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const
    {
        for (const auto& c : checks) {
            if (c.status != CheckStatus::pass) return false;
        }
        return true;
    }
};

/// Uniform rationals num/den with |num| <= max_num and 1 <= den <= max_den.
class RationalSampler {
public:
    RationalSampler(std::uint64_t seed, long max_num, long max_den) : rng_(seed), num_(-max_num, max_num), den_(1, max_den) {}

    BigRational operator()() { return make_rational(num_(rng_), den_(rng_)); }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

inline constexpr std::uint64_t positivity_seed = 20260101;
inline constexpr unsigned positivity_samples = 1000;
inline constexpr std::uint64_t fiber_seed = 1337;
inline constexpr unsigned random_fiber_points = 10;
inline constexpr std::uint64_t identity_seed = 55;
inline constexpr unsigned identity_samples = 50;

/// Minimum of j(P, Q) over the sampled points, or the first non-positive value.
inline std::pair<bool, BigRational> jacobian_positivity(const PinchukMap& m, std::uint64_t seed = positivity_seed,
                                                        unsigned count = positivity_samples)
{
    MultiPoly j = jacobian(m);
    RationalSampler rnd(seed, 40, 12);
    std::optional<BigRational> least;
    for (unsigned i = 0; i < count; ++i) {
        Point pt{{"x", rnd()}, {"y", rnd()}};
        BigRational v = evaluate(j, pt);
        if (sign(v) <= 0) return {false, v};
        if (!least || v < *least) least = v;
    }
    return {true, least.value_or(0)};
}

/// Off-curve points (p, q) with p outside {-1, 0}, drawn deterministically.
inline std::vector<std::pair<BigRational, BigRational>> random_off_curve_points(std::uint64_t seed = fiber_seed,
                                                                                unsigned count = random_fiber_points)
{
    RationalSampler ps(seed, 60, 7), qs(seed + 1, 3000, 5);
    std::vector<std::pair<BigRational, BigRational>> out;
    while (out.size() < count) {
        BigRational p = ps(), q = qs();
        if (p == 0 || p == -1 || classify(p, q) != FiberClass::off_curve) continue;
        out.emplace_back(p, q);
    }
    return out;
}

/// F(R(x, y)) and G(x, y) agree at sampled points with small nonzero x.
inline bool sampled_identity_agreement(const DoubleIdentity& d, const PinchukMap& m, std::uint64_t seed = identity_seed,
                                       unsigned count = identity_samples)
{
    RationalSampler ys(seed, 30, 9), xs(seed + 1, 9, 97);
    for (unsigned i = 0; i < count; ++i) {
        BigRational y = ys(), x = xs();
        if (x == 0) x = make_rational(1, 97);
        Point at{{"x", x}, {"y", y}};
        RatFunc r1 = d.R.first, r2 = d.R.second;
        Point image{{"x", rf_evaluate(r1, at)}, {"y", rf_evaluate(r2, at)}};
        if (evaluate(m.P, image) != evaluate(d.G.first, at)) return false;
        if (evaluate(m.Q, image) != evaluate(d.G.second, at)) return false;
    }
    return true;
}

namespace detail {

struct VerifyContext {
    PinchukMap map = default_map();
    PinchukMap alternate = alternate_map();
};

inline CheckOutcome outcome(bool ok, std::string detail)
{
    return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

inline std::string vertex_list(const NewtonPolygon& p)
{
    std::string s;
    for (const auto& v : p.vertices) s += to_string(v);
    return s;
}

}  // namespace detail

struct CheckSpec {
    std::string suite;
    std::string name;
    std::function<CheckOutcome()> run;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"all", "jacobian", "asymptotic", "levelset", "identities", "newton"};
    return names;
}

inline std::vector<CheckSpec> registered_checks()
{
    auto ctx = std::make_shared<detail::VerifyContext>();
    using detail::outcome;
    std::vector<CheckSpec> c;

    c.push_back({"jacobian", "jacobian.sos_identity", [ctx] {
                     return outcome(check_jacobian_identity(ctx->map), "j(P,Q) - (t^2 + (t+f(13+15h))^2 + f^2) = 0");
                 }});
    c.push_back({"jacobian", "jacobian.sos_identity_alternate", [ctx] {
                     return outcome(check_jacobian_identity(ctx->alternate), "same identity for the degree-40 map");
                 }});
    c.push_back({"jacobian", "jacobian.positivity_sampling", [ctx] {
                     auto [ok, v] = jacobian_positivity(ctx->map);
                     return outcome(ok, std::to_string(positivity_samples) + " points, " +
                                            (ok ? "least value " + to_decimal(v, 6) : "non-positive value " + to_string(v)));
                 }});
    c.push_back({"jacobian", "jacobian.hamiltonian", [ctx] {
                     return outcome(hamiltonian_identity(ctx->map), "H(P).grad(Q) = j(P,Q)");
                 }});
    c.push_back({"jacobian", "degrees.totals", [ctx] {
                     Degree dp = ctx->map.P.total_degree(), dq = ctx->map.Q.total_degree(),
                            da = ctx->alternate.Q.total_degree();
                     return outcome(dp == 10u && dq == 25u && da == 40u,
                                    "deg P=" + dp.to_string() + " Q=" + dq.to_string() + " Qtilde=" + da.to_string());
                 }});
    c.push_back({"jacobian", "degrees.triangular_shift", [ctx] {
                     UniPoly S = triangular_shift(ctx->map, ctx->alternate);
                     return outcome(true, "Qtilde = Q + S(P), S = " + to_string(S));
                 }});
    c.push_back({"jacobian", "degrees.degree_floor", [ctx] {
                     auto samples = degree_floor_samples(ctx->map);
                     return outcome(check_degree_floor(ctx->map, samples),
                                    std::to_string(samples.size()) + " shifts of degree <= 2, deg Q stays 25");
                 }});

    c.push_back({"asymptotic", "asymptotic.parametrization_residual", [] {
                     return outcome(residual_check(), "B(P(s),Q(s)) = 0");
                 }});
    c.push_back({"asymptotic", "asymptotic.special_points", [] {
                     auto s = s_form();
                     auto a = curve_point(s, 0), b = curve_point(s, 1), d = curve_point(s, -1);
                     bool ok = a == std::pair<BigRational, BigRational>(-1, make_rational(-163, 4)) &&
                               b == std::pair<BigRational, BigRational>(0, 0) &&
                               d == std::pair<BigRational, BigRational>(0, 208);
                     return outcome(ok, "s=0 (" + to_string(a.first) + "," + to_string(a.second) + ") s=1 (" +
                                            to_string(b.first) + "," + to_string(b.second) + ") s=-1 (" +
                                            to_string(d.first) + "," + to_string(d.second) + ")");
                 }});
    c.push_back({"asymptotic", "asymptotic.form_consistency", [] {
                     return outcome(check_parametrization_consistency(), "s-form at s=h+1 equals h-form from u");
                 }});
    c.push_back({"asymptotic", "asymptotic.irreducibility", [] {
                     auto cert = irreducibility_certificate(build_implicit());
                     UniPoly p1("P", {BigRational(1), BigRational(1)});
                     bool odd_cube = false;
                     for (const auto& f : cert.odd_factors) odd_cube = odd_cube || (f.factor == p1 && f.multiplicity == 3);
                     return outcome(odd_cube, "Q^2 coefficient 1, discriminant 4R, factor P + 1 with multiplicity 3");
                 }});
    c.push_back({"asymptotic", "asymptotic.closure_point", [] {
                     auto a = closure_analysis();
                     std::string detail;
                     for (const auto& p : a.singular_points) {
                         if (!detail.empty()) detail += ", ";
                         detail += "(" + to_string(p.p) + "," + to_string(p.q) + ")" +
                                   (p.on_real_curve ? " on curve" : " off curve");
                     }
                     return outcome(a.unique_singular_on_curve, "singular points " + detail);
                 }});
    c.push_back({"asymptotic", "asymptotic.vertical_lines", [] {
                     auto s = s_form();
                     bool ok = vertical_line_count(s, -2) == 0 && vertical_line_count(s, -1) == 1 &&
                               vertical_line_count(s, make_rational(-1, 2)) == 2 && vertical_line_count(s, 3) == 2;
                     return outcome(ok, "P(s)=c has 0, 1, 2 real roots for c<-1, c=-1, c>-1");
                 }});

    c.push_back({"levelset", "levelset.identities", [ctx] {
                     return outcome(check_levelset_identities(level_set_param(), ctx->map),
                                    "P(x(h),y(h)) = c and h(x(h),y(h)) = h");
                 }});
    c.push_back({"levelset", "levelset.pole_and_limit", [ctx] {
                     auto a = pole_and_limit_analysis(ctx->map);
                     return outcome(true, "order " + std::to_string(a.pole_order) +
                                              " at c=h, limit -u(h^2+h,h) at c=h^2+2h");
                 }});
    c.push_back({"levelset", "levelset.fiber_special_points", [ctx] {
                     auto a = special_fiber_probe(0, 0, ctx->map);
                     auto b = special_fiber_probe(-1, make_rational(-163, 4), ctx->map);
                     if (a.inconclusive || b.inconclusive) {
                         return CheckOutcome{CheckStatus::inconclusive, to_string(a) + "; " + to_string(b)};
                     }
                     return outcome(a.count == 0 && b.count == 0, to_string(a) + "; " + to_string(b));
                 }});
    c.push_back({"levelset", "levelset.fiber_on_curve", [ctx] {
                     auto r = fiber_count(3, make_rational(-4235, 4), ctx->map);
                     return outcome(r.count == 1 && r.classification == FiberClass::on_curve, to_string(r));
                 }});
    c.push_back({"levelset", "levelset.fiber_off_curve", [ctx] {
                     auto r = fiber_count(3, -2676, ctx->map);
                     bool ok = r.count == 2;
                     std::string bad;
                     for (const auto& [p, q] : random_off_curve_points()) {
                         auto s = fiber_count(p, q, ctx->map);
                         if (s.count != 2) {
                             ok = false;
                             bad += " " + to_string(s);
                         }
                     }
                     return outcome(ok, to_string(r) + " and " + std::to_string(random_fiber_points) +
                                            " random off-curve points with count 2" + bad);
                 }});

    c.push_back({"identities", "identities.plus_generators", [ctx] {
                     build_double_identity(IdentityVariant::plus, ctx->map);
                     return outcome(true, "t o R = xy, h o R = (x+y)y, f o R = (x+y)^2(y^2+xy+1); P o R, Q o R polynomial");
                 }});
    c.push_back({"identities", "identities.plus_boundary", [ctx] {
                     auto d = build_double_identity(IdentityVariant::plus, ctx->map);
                     auto e = expected_plus_boundary(ctx->map.u);
                     return outcome(d.boundary == e, "G(0,y) = (y^4+2y^2, -u(y^4+y^2,y^2))");
                 }});
    c.push_back({"identities", "identities.plus_coverage", [ctx] {
                     auto cov = coverage_check(build_double_identity(IdentityVariant::plus, ctx->map), ctx->map.u);
                     return outcome(cov.holds() && cov.h_sign == 1, "h = " + to_string(cov.h_of_y) +
                                                                         ", even in y, fold at (0,0)");
                 }});
    c.push_back({"identities", "identities.minus_coverage", [ctx] {
                     auto cov = coverage_check(build_double_identity(IdentityVariant::minus, ctx->map), ctx->map.u);
                     return outcome(cov.holds() && cov.h_sign == -1, "h = " + to_string(cov.h_of_y) +
                                                                          ", even in y, fold at (0,0)");
                 }});
    c.push_back({"identities", "identities.sampled_evaluation", [ctx] {
                     auto d = build_double_identity(IdentityVariant::plus, ctx->map);
                     return outcome(sampled_identity_agreement(d, ctx->map),
                                    std::to_string(identity_samples) + " points with x != 0, F(R) = G");
                 }});

    c.push_back({"newton", "newton.vertex_sets", [ctx] {
                     auto np = newton_polygon(ctx->map.P), nq = newton_polygon(ctx->map.Q),
                          na = newton_polygon(ctx->alternate.Q);
                     std::vector<LatticePoint> ep{{0, 0}, {2, 0}, {6, 4}, {0, 1}};
                     std::vector<LatticePoint> eq{{0, 0}, {5, 0}, {15, 10}, {3, 4}, {0, 1}};
                     std::vector<LatticePoint> ea{{0, 0}, {8, 0}, {24, 16}, {0, 4}};
                     return outcome(np.vertices == ep && nq.vertices == eq && na.vertices == ea,
                                    "N(P) " + detail::vertex_list(np) + " N(Q) " + detail::vertex_list(nq) +
                                        " N(Qtilde) " + detail::vertex_list(na));
                 }});
    c.push_back({"newton", "newton.radial_similarity", [ctx] {
                     auto np = newton_polygon(ctx->map.P), nq = newton_polygon(ctx->map.Q),
                          na = newton_polygon(ctx->alternate.Q);
                     auto k = radial_similarity(np, na);
                     bool ok = k && *k == 4 && !radial_similarity(np, nq);
                     return outcome(ok, "N(Qtilde) = " + (k ? std::to_string(*k) : std::string("none")) +
                                            " N(P); N(Q) not similar to N(P)");
                 }});
    c.push_back({"newton", "newton.edge_slopes", [ctx] {
                     bool ok = true;
                     for (const auto* q : {&ctx->map.P, &ctx->map.Q, &ctx->alternate.Q}) {
                         ok = ok && !has_negative_slope(newton_polygon(*q));
                     }
                     return outcome(ok, "no edge of negative slope in N(P), N(Q), N(Qtilde)");
                 }});
    c.push_back({"newton", "newton.support_containment", [ctx] {
                     bool ok = true;
                     for (const auto* q : {&ctx->map.P, &ctx->map.Q, &ctx->alternate.Q}) {
                         auto poly = newton_polygon(*q);
                         for (const auto& t : q->terms()) {
                             Monomial mono = q->monomial_of(t);
                             ok = ok && contains(poly, {mono.exponent("x"), mono.exponent("y")});
                         }
                     }
                     return outcome(ok, "every support point lies in its polygon");
                 }});
    return c;
}

/// Runs the checks of `suite` in registration order. Throws UnknownSuite.
inline VerificationReport run_suite(const std::string& suite)
{
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw UnknownSuite("unknown suite '" + suite + "'");

    VerificationReport report{suite, {}};
    for (const auto& spec : registered_checks()) {
        if (suite != "all" && spec.suite != suite) continue;
        auto start = std::chrono::steady_clock::now();
        CheckOutcome out;
        try {
            out = spec.run();
        } catch (const std::exception& e) {
            out = {CheckStatus::fail, std::string("error: ") + e.what()};
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back({spec.name, out.status, ms, out.detail});
    }
    return report;
}

/// Elapsed times are omitted unless `timing` is set, so that the default
/// rendering depends only on the results.
inline std::string render(const VerificationReport& r, bool timing = false)
{
    std::string out = "verify suite=" + r.suite + "\n";
    unsigned counts[3] = {0, 0, 0};
    for (const auto& c : r.checks) {
        ++counts[static_cast<int>(c.status)];
        out += std::string(to_string(c.status)) + " " + c.name;
        if (timing) out += " [" + std::to_string(static_cast<long long>(c.elapsed_ms + 0.5)) + " ms]";
        out += ": " + c.detail + "\n";
    }
    out += "summary: " + std::to_string(r.checks.size()) + " checks, " + std::to_string(counts[0]) + " pass, " +
           std::to_string(counts[1]) + " fail, " + std::to_string(counts[2]) + " inconclusive\n";
    return out;
}

}  // namespace pinchuk

#endif  // PINCHUK_VERIFY_HPP
