#ifndef PINCHUK_RESULTANT_HPP
#define PINCHUK_RESULTANT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/multipoly.hpp"

namespace pinchuk {

/// Sylvester matrix of a and b with respect to `var`: deg_b rows of a's
/// coefficients followed by deg_a rows of b's, highest power first.
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& a, const MultiPoly& b,
                                                            const std::string& var)
{
    Degree da = a.degree_in(var), db = b.degree_in(var);
    if (da.is_neg_infinity() || db.is_neg_infinity() || da.value() == 0 || db.value() == 0) {
        throw DegreeError("resultant needs positive degree in '" + var + "' for both polynomials");
    }
    auto ca = a.coefficients_in(var);
    auto cb = b.coefficients_in(var);
    std::size_t m = da.value(), n = db.value(), size = m + n;
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = ca[m - j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = cb[n - j];
    }
    return s;
}

/// Determinant by fraction-free Bareiss elimination; every division is exact.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(1);
    MultiPoly prev = MultiPoly::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return MultiPoly();
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly v = m[k][k] * m[i][j];
                if (!m[i][k].is_zero() && !m[k][j].is_zero()) v = v - m[i][k] * m[k][j];
                m[i][j] = prev.is_one() || v.is_zero() ? std::move(v) : exact_divide(v, prev);
            }
            m[i][k] = MultiPoly();
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

/// Resultant of a and b eliminating `var`, as the Sylvester determinant.
inline MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var)
{
    auto rest = detail::merge_variables(a.variables(), b.variables());
    std::erase(rest, var);
    MultiPoly det = bareiss_determinant(sylvester_matrix(a, b, var));
    return det.with_variables(detail::merge_variables(rest, det.variables()));
}

}  // namespace pinchuk

#endif  // PINCHUK_RESULTANT_HPP
