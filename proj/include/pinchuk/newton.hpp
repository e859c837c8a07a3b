#ifndef PINCHUK_NEWTON_HPP
#define PINCHUK_NEWTON_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/multipoly.hpp"
#include "pinchuk/rational.hpp"

namespace pinchuk {

struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::string to_string(const LatticePoint& p)
{
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

/// Convex lattice polygon, vertices counter-clockwise from the
/// lexicographically smallest.
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;
};

namespace detail {

inline std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b)
{
    return (a.a - o.a) * (b.b - o.b) - (a.b - o.b) * (b.a - o.a);
}

}  // namespace detail

/// Andrew's monotone chain; collinear boundary points are dropped.
inline NewtonPolygon convex_hull(std::vector<LatticePoint> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {pts};
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return {hull};
}

/// Hull of the exponent support together with the origin.
inline NewtonPolygon newton_polygon(const MultiPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial("Newton polygon of the zero polynomial");
    for (const auto& v : p.occurring_variables()) {
        if (v != "x" && v != "y") throw ForeignVariable("Newton polygon needs a polynomial in x, y; found '" + v + "'");
    }
    std::vector<LatticePoint> pts{{0, 0}};
    for (const auto& t : p.terms()) {
        Monomial m = p.monomial_of(t);
        pts.push_back({std::int64_t(m.exponent("x")), std::int64_t(m.exponent("y"))});
    }
    return convex_hull(std::move(pts));
}

/// r with b = r * a about the origin, when one exists.
inline std::optional<BigRational> radial_scale(const NewtonPolygon& a, const NewtonPolygon& b)
{
    if (a.vertices.size() != b.vertices.size() || a.vertices.empty()) return std::nullopt;
    std::optional<BigRational> r;
    for (std::size_t i = 0; i < a.vertices.size() && !r; ++i) {
        const auto &p = a.vertices[i], &q = b.vertices[i];
        if (p.a != 0) r = make_rational(q.a, p.a);
        else if (p.b != 0) r = make_rational(q.b, p.b);
    }
    if (!r) return a.vertices == b.vertices ? std::optional<BigRational>(1) : std::nullopt;
    if (sign(*r) <= 0) return std::nullopt;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        const auto &p = a.vertices[i], &q = b.vertices[i];
        if (BigRational(q.a) != *r * BigRational(p.a) || BigRational(q.b) != *r * BigRational(p.b)) return std::nullopt;
    }
    return r;
}

/// Integer k with b = k * a, or none.
inline std::optional<std::int64_t> radial_similarity(const NewtonPolygon& a, const NewtonPolygon& b)
{
    auto r = radial_scale(a, b);
    if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p()) return std::nullopt;
    return r->get_num().get_si();
}

struct EdgeSlope {
    bool vertical = false;
    BigRational value;  // meaningless when vertical

    friend bool operator==(const EdgeSlope& l, const EdgeSlope& r)
    {
        return l.vertical == r.vertical && (l.vertical || l.value == r.value);
    }
};

inline std::string to_string(const EdgeSlope& s) { return s.vertical ? "vertical" : to_string(s.value); }

inline EdgeSlope vertical_slope() { return {true, 0}; }

/// Slope of each boundary edge, in vertex order.
inline std::vector<EdgeSlope> edge_slopes(const NewtonPolygon& poly)
{
    const auto& v = poly.vertices;
    if (v.size() < 2) throw DegeneratePolygon("edge slopes need at least two vertices");
    std::vector<EdgeSlope> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto &p = v[i], &q = v[(i + 1) % v.size()];
        if (p.a == q.a) out.push_back(vertical_slope());
        else out.push_back({false, make_rational(q.b - p.b, q.a - p.a)});
    }
    return out;
}

inline bool has_negative_slope(const NewtonPolygon& poly)
{
    for (const auto& s : edge_slopes(poly)) {
        if (!s.vertical && sign(s.value) < 0) return true;
    }
    return false;
}

/// Closed-polygon membership by exact half-plane tests.
inline bool contains(const NewtonPolygon& poly, const LatticePoint& p)
{
    const auto& v = poly.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return v[0] == p;
    if (v.size() == 2) {
        return detail::cross(v[0], v[1], p) == 0 && std::min(v[0].a, v[1].a) <= p.a && p.a <= std::max(v[0].a, v[1].a) &&
               std::min(v[0].b, v[1].b) <= p.b && p.b <= std::max(v[0].b, v[1].b);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (detail::cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
    }
    return true;
}

/// One `(a,b)` per line.
inline std::string to_string(const NewtonPolygon& poly)
{
    std::string out;
    for (const auto& p : poly.vertices) out += to_string(p) + "\n";
    return out;
}

}  // namespace pinchuk

#endif  // PINCHUK_NEWTON_HPP
