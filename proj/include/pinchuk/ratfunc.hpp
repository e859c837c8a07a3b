#ifndef PINCHUK_RATFUNC_HPP
#define PINCHUK_RATFUNC_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/multipoly.hpp"
#include "pinchuk/polytext.hpp"
#include "pinchuk/unipoly.hpp"

namespace pinchuk {

/// Numerator/denominator pair kept unreduced. Equality is decided by
/// cross-multiplication, so no multivariate gcd is ever needed.
class RatFunc {
public:
    RatFunc() : num_(), den_(MultiPoly::constant(1)) {}

    RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(1)) {}  // NOLINT: implicit by intent

    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    std::vector<std::string> variables() const
    {
        return detail::merge_variables(num_.variables(), den_.variables());
    }

    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    /// The polynomial this function equals, when the denominator divides.
    std::optional<MultiPoly> as_polynomial() const
    {
        try {
            return exact_divide(num_, den_);
        } catch (const InexactDivision&) {
            return std::nullopt;
        }
    }

private:
    MultiPoly num_;
    MultiPoly den_;
};

inline bool rf_equal(const RatFunc& a, const RatFunc& b)
{
    return a.num() * b.den() == b.num() * a.den();
}

using RatBindings = std::map<std::string, RatFunc>;

/// Composition p(bindings) over a common denominator.
inline RatFunc rf_substitute(const MultiPoly& p, const RatBindings& bindings)
{
    std::vector<detail::FractionBinding> fb;
    for (const auto& [name, value] : bindings) fb.push_back({name, value.num(), value.den(), 0, {}});
    auto [num, den] = detail::compose(p, std::move(fb));
    return RatFunc(std::move(num), std::move(den));
}

inline BigRational rf_evaluate(const RatFunc& a, const Point& point)
{
    BigRational d = evaluate(a.den(), point);
    if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
    return evaluate(a.num(), point) / d;
}

/// Leading behaviour of `a` along v = value: a equals
/// shift^order * (coefficient + O(shift)) where shift = v - value.
struct LaurentLeading {
    int order;
    RatFunc coefficient;
};

namespace detail {

inline std::string fresh_variable(const std::vector<std::string>& taken)
{
    std::string name = "eps";
    while (std::binary_search(taken.begin(), taken.end(), name)) name += "_";
    return name;
}

inline std::pair<unsigned, MultiPoly> lowest_order(const MultiPoly& p, const std::string& var)
{
    auto slices = p.coefficients_in(var);
    for (std::size_t k = 0; k < slices.size(); ++k) {
        if (!slices[k].is_zero()) return {static_cast<unsigned>(k), slices[k]};
    }
    return {0, MultiPoly()};
}

}  // namespace detail

/// Expands a around v = value by substituting v = value + eps and reading
/// off the lowest power of eps in numerator and denominator.
inline LaurentLeading laurent_leading(const RatFunc& a, const std::string& v, const MultiPoly& value)
{
    auto vars = detail::merge_variables(a.variables(), value.variables());
    std::string eps = detail::fresh_variable(vars);
    Bindings shift{{v, value + MultiPoly::variable(eps)}};
    MultiPoly n = substitute(a.num(), shift);
    MultiPoly d = substitute(a.den(), shift);
    if (n.is_zero()) return {0, RatFunc(MultiPoly())};
    auto [on, cn] = detail::lowest_order(n, eps);
    auto [od, cd] = detail::lowest_order(d, eps);
    return {static_cast<int>(on) - static_cast<int>(od), RatFunc(std::move(cn), std::move(cd))};
}

namespace detail {

inline RatFunc cancel_univariate(RatFunc r)
{
    auto occ = merge_variables(r.num().occurring_variables(), r.den().occurring_variables());
    if (r.num().is_zero()) return RatFunc(MultiPoly());
    if (occ.empty()) return RatFunc(MultiPoly::constant(r.num().constant_term() / r.den().constant_term()));
    if (occ.size() != 1) return r;
    UniPoly n = UniPoly::from_multipoly(r.num(), occ.front());
    UniPoly d = UniPoly::from_multipoly(r.den(), occ.front());
    UniPoly g = uni_gcd(n, d);
    if (g.size_degree() == 0) return r;
    return RatFunc(exact_quotient(n, g).to_multipoly(), exact_quotient(d, g).to_multipoly());
}

}  // namespace detail

/// Restriction of a to v = value. A removable 0/0 along the substitution is
/// resolved by cancelling the common power of (v - value); a univariate
/// result is then reduced by its gcd.
inline RatFunc rf_specialize(const RatFunc& a, const std::string& v, const MultiPoly& value)
{
    auto vars = a.variables();
    if (!std::binary_search(vars.begin(), vars.end(), v)) {
        throw ForeignVariable("rf_specialize: '" + v + "' does not occur in the rational function");
    }
    Bindings direct{{v, value}};
    MultiPoly d = substitute(a.den(), direct);
    RatFunc out;
    if (!d.is_zero()) {
        out = RatFunc(substitute(a.num(), direct), std::move(d));
    } else {
        LaurentLeading lead = laurent_leading(a, v, value);
        if (lead.order < 0) {
            throw DivisionByZero("denominator vanishes identically after substituting '" + v + "'");
        }
        out = lead.order > 0 ? RatFunc(MultiPoly()) : lead.coefficient;
    }
    return detail::cancel_univariate(std::move(out));
}

inline RatFunc rf_specialize(const RatFunc& a, const std::string& v, const BigRational& value)
{
    return rf_specialize(a, v, MultiPoly::constant(value));
}

inline std::string to_string(const RatFunc& r) { return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")"; }

}  // namespace pinchuk

#endif  // PINCHUK_RATFUNC_HPP
