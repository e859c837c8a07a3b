#ifndef PINCHUK_BOX_SOLVER_HPP
#define PINCHUK_BOX_SOLVER_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pinchuk/interval.hpp"
#include "pinchuk/multipoly.hpp"
#include "pinchuk/resultant.hpp"
#include "pinchuk/unipoly.hpp"

namespace pinchuk {

/// Outcome of counting the real solutions of {f1 = 0, f2 = 0} in x, y.
struct BoxSolveResult {
    unsigned certified = 0;     // boxes proven to hold exactly one solution
    unsigned unresolved = 0;    // boxes left open at the depth limit
    unsigned excluded = 0;      // boxes proven solution-free
    unsigned x_candidates = 0;  // real roots of the x-projection
    unsigned y_candidates = 0;  // real roots of the y-projection
    bool projection_vanished = false;

    bool conclusive() const { return unresolved == 0 && !projection_vanished; }
};

namespace detail {

struct SolverBox {
    Interval x;
    Interval y;
    unsigned depth;
};

// Krawczyk test: K(X) strictly inside X proves a unique zero in X.
inline bool krawczyk_contracts(const std::array<MultiPoly, 2>& f, const std::array<std::array<MultiPoly, 2>, 2>& jac,
                               const SolverBox& b)
{
    BigRational mx = b.x.mid(), my = b.y.mid();
    Point m{{"x", mx}, {"y", my}};
    BigRational j00 = evaluate(jac[0][0], m), j01 = evaluate(jac[0][1], m);
    BigRational j10 = evaluate(jac[1][0], m), j11 = evaluate(jac[1][1], m);
    BigRational det = j00 * j11 - j01 * j10;
    if (det == 0) return false;
    // Y = J(m)^-1
    std::array<std::array<BigRational, 2>, 2> y{{{j11 / det, -j01 / det}, {-j10 / det, j00 / det}}};
    BigRational f0 = evaluate(f[0], m), f1 = evaluate(f[1], m);

    Box box{{"x", b.x}, {"y", b.y}};
    std::array<std::array<Interval, 2>, 2> jx;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) jx[i][j] = evaluate(jac[i][j], box);
    }
    std::array<Interval, 2> dx{b.x - Interval::point(mx), b.y - Interval::point(my)};
    std::array<BigRational, 2> mid{mx, my};
    std::array<Interval, 2> outer{b.x, b.y};
    for (int i = 0; i < 2; ++i) {
        BigRational newton = mid[i] - (y[i][0] * f0 + y[i][1] * f1);
        Interval k = Interval::point(newton);
        for (int j = 0; j < 2; ++j) {
            // (I - Y J(X))_{ij}
            Interval mij = Interval::point(i == j ? 1 : 0) - (y[i][0] * jx[0][j] + y[i][1] * jx[1][j]);
            k = k + mij * dx[j];
        }
        if (!k.strictly_inside(outer[i])) return false;
    }
    return true;
}

inline bool interval_has_root(const std::vector<UniPoly>& seq, const UniPoly& sf, const Interval& iv)
{
    return sf.sign_at(iv.lo) == 0 || sturm_count(seq, iv.lo, iv.hi) > 0;
}

}  // namespace detail

/// Counts real solutions of f1 = f2 = 0 (polynomials in x, y). Candidates
/// come from the real roots of both resultants; each candidate box is
/// either excluded by interval evaluation, certified by the Krawczyk test,
/// or bisected until `depth_limit`.
inline BoxSolveResult solve_polynomial_system(const MultiPoly& f1, const MultiPoly& f2, unsigned depth_limit = 64)
{
    BoxSolveResult out;
    MultiPoly rx = resultant(f1, f2, "y");
    MultiPoly ry = resultant(f1, f2, "x");
    if (rx.is_zero() || ry.is_zero()) {
        out.projection_vanished = true;
        return out;
    }
    UniPoly px = UniPoly::from_multipoly(rx, "x"), py = UniPoly::from_multipoly(ry, "y");
    UniPoly sx = squarefree_part(px), sy = squarefree_part(py);
    auto seqx = sturm_sequence(sx), seqy = sturm_sequence(sy);
    auto xs = isolate_real_roots(sx), ys = isolate_real_roots(sy);
    out.x_candidates = static_cast<unsigned>(xs.size());
    out.y_candidates = static_cast<unsigned>(ys.size());

    std::array<MultiPoly, 2> f{f1.with_variables({"x", "y"}), f2.with_variables({"x", "y"})};
    std::array<std::array<MultiPoly, 2>, 2> jac{{{diff(f[0], "x"), diff(f[0], "y")}, {diff(f[1], "x"), diff(f[1], "y")}}};

    std::vector<detail::SolverBox> work;
    for (const auto& rxi : xs) {
        for (const auto& ryi : ys) work.push_back({{rxi.lo, rxi.hi}, {ryi.lo, ryi.hi}, 0});
    }
    while (!work.empty()) {
        detail::SolverBox b = work.back();
        work.pop_back();
        Box box{{"x", b.x}, {"y", b.y}};
        if (!evaluate(f[0], box).contains_zero() || !evaluate(f[1], box).contains_zero()) {
            ++out.excluded;
            continue;
        }
        if (detail::krawczyk_contracts(f, jac, b)) {
            ++out.certified;
            continue;
        }
        if (b.depth >= depth_limit) {
            ++out.unresolved;
            continue;
        }
        // Split lines avoid projection roots, so no solution lies on them.
        BigRational cx = detail::split_point(sx, b.x.lo, b.x.hi);
        BigRational cy = detail::split_point(sy, b.y.lo, b.y.hi);
        for (const Interval& ix : {Interval{b.x.lo, cx}, Interval{cx, b.x.hi}}) {
            if (!detail::interval_has_root(seqx, sx, ix)) continue;
            for (const Interval& iy : {Interval{b.y.lo, cy}, Interval{cy, b.y.hi}}) {
                if (!detail::interval_has_root(seqy, sy, iy)) continue;
                work.push_back({ix, iy, b.depth + 1});
            }
        }
    }
    return out;
}

}  // namespace pinchuk

#endif  // PINCHUK_BOX_SOLVER_HPP
