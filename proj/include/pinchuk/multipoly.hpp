#ifndef PINCHUK_MULTIPOLY_HPP
#define PINCHUK_MULTIPOLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/rational.hpp"

namespace pinchuk {

/// Polynomial degree with a distinguished value for the zero polynomial.
/// Negative infinity compares below every finite degree.
class Degree {
public:
    constexpr Degree() = default;
    constexpr explicit Degree(unsigned value) : value_(value) {}

    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return !value_.has_value(); }

    unsigned value() const
    {
        if (!value_) throw DegreeError("degree of the zero polynomial is -infinity");
        return *value_;
    }

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b)
    {
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(const Degree& a, unsigned b) { return a.value_ == b; }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

private:
    std::optional<unsigned> value_;
};

/// A power product keyed by variable name. Zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<const std::string, std::uint32_t>> powers)
    {
        for (const auto& [name, e] : powers) set(name, e);
    }

    void set(const std::string& name, std::uint32_t exponent)
    {
        if (exponent == 0) {
            powers_.erase(name);
        } else {
            powers_[name] = exponent;
        }
    }

    std::uint32_t exponent(const std::string& name) const
    {
        auto it = powers_.find(name);
        return it == powers_.end() ? 0 : it->second;
    }

    unsigned total_degree() const
    {
        unsigned d = 0;
        for (const auto& [name, e] : powers_) d += e;
        return d;
    }

    const std::map<std::string, std::uint32_t>& powers() const { return powers_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::map<std::string, std::uint32_t> powers_;
};

namespace detail {

using Exponents = std::vector<std::uint32_t>;

inline unsigned total(const Exponents& e)
{
    unsigned d = 0;
    for (auto v : e) d += v;
    return d;
}

// Graded lexicographic comparison; the first variable is most significant.
inline bool grlex_greater(const Exponents& a, const Exponents& b)
{
    unsigned da = total(a), db = total(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto v : e) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b)
{
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

/// Sparse multivariate polynomial over BigRational.
///
/// Variables are kept sorted by name and form the ordered set the exponent
/// vectors refer to. Terms are stored in descending graded-lex order with no
/// zero coefficients, so two equal polynomials over the same variable set
/// have identical term lists.
class MultiPoly {
public:
    using Exponents = detail::Exponents;

    struct Term {
        Exponents exponents;
        BigRational coefficient;
    };

    MultiPoly() = default;

    explicit MultiPoly(std::vector<std::string> variables) : vars_(sorted_unique(std::move(variables)))
    {
    }

    static MultiPoly constant(const BigRational& c, std::vector<std::string> variables = {})
    {
        MultiPoly p(std::move(variables));
        if (c != 0) p.terms_.push_back({Exponents(p.vars_.size(), 0), c});
        return p;
    }

    static MultiPoly variable(const std::string& name)
    {
        MultiPoly p({name});
        p.terms_.push_back({Exponents{1}, BigRational(1)});
        return p;
    }

    static MultiPoly monomial(const Monomial& m, const BigRational& c = 1)
    {
        std::vector<std::string> names;
        for (const auto& [name, e] : m.powers()) names.push_back(name);
        MultiPoly p(std::move(names));
        if (c == 0) return p;
        Exponents e(p.vars_.size());
        for (std::size_t i = 0; i < p.vars_.size(); ++i) e[i] = m.exponent(p.vars_[i]);
        p.terms_.push_back({std::move(e), c});
        return p;
    }

    /// Builds a polynomial from arbitrary terms; duplicates are summed.
    static MultiPoly from_terms(std::vector<std::string> variables, std::vector<Term> terms)
    {
        MultiPoly p(std::move(variables));
        for (const auto& t : terms) {
            if (t.exponents.size() != p.vars_.size()) {
                throw Error("term arity does not match variable count");
            }
        }
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && detail::total(terms_[0].exponents) == 0);
    }

    bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coefficient == 1; }

    bool has_variable(const std::string& name) const
    {
        return std::binary_search(vars_.begin(), vars_.end(), name);
    }

    /// Variables with a nonzero exponent somewhere in the support.
    std::vector<std::string> occurring_variables() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            for (const auto& t : terms_) {
                if (t.exponents[i] != 0) {
                    out.push_back(vars_[i]);
                    break;
                }
            }
        }
        return out;
    }

    BigRational constant_term() const
    {
        if (!terms_.empty() && detail::total(terms_.back().exponents) == 0) {
            return terms_.back().coefficient;
        }
        return 0;
    }

    BigRational coefficient(const Monomial& m) const
    {
        for (const auto& [name, e] : m.powers()) {
            if (!has_variable(name)) return 0;
        }
        Exponents e(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) e[i] = m.exponent(vars_[i]);
        for (const auto& t : terms_) {
            if (t.exponents == e) return t.coefficient;
        }
        return 0;
    }

    Monomial monomial_of(const Term& t) const
    {
        Monomial m;
        for (std::size_t i = 0; i < vars_.size(); ++i) m.set(vars_[i], t.exponents[i]);
        return m;
    }

    Degree total_degree() const
    {
        if (terms_.empty()) return Degree::neg_infinity();
        return Degree(detail::total(terms_.front().exponents));
    }

    Degree degree_in(const std::string& name) const
    {
        if (terms_.empty()) return Degree::neg_infinity();
        auto idx = index_of(name);
        if (!idx) return Degree(0);
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.exponents[*idx]);
        return Degree(d);
    }

    /// Coefficients of successive powers of `name`; the variable is removed
    /// from the coefficient polynomials. Element k multiplies name^k.
    std::vector<MultiPoly> coefficients_in(const std::string& name) const
    {
        auto idx = index_of(name);
        std::vector<std::string> rest;
        for (const auto& v : vars_) {
            if (v != name) rest.push_back(v);
        }
        if (!idx) {
            MultiPoly copy = *this;
            return {copy};
        }
        std::vector<std::vector<Term>> buckets;
        for (const auto& t : terms_) {
            std::uint32_t k = t.exponents[*idx];
            if (buckets.size() <= k) buckets.resize(k + 1);
            Exponents e;
            e.reserve(rest.size());
            for (std::size_t i = 0; i < t.exponents.size(); ++i) {
                if (i != *idx) e.push_back(t.exponents[i]);
            }
            buckets[k].push_back({std::move(e), t.coefficient});
        }
        if (buckets.empty()) buckets.resize(1);
        std::vector<MultiPoly> out;
        out.reserve(buckets.size());
        for (auto& b : buckets) {
            MultiPoly c(rest);
            // Within a bucket the dropped coordinate is constant, so the
            // remaining exponents are still in grlex order.
            c.terms_ = std::move(b);
            out.push_back(std::move(c));
        }
        return out;
    }

    /// Same polynomial viewed over a superset of its variables.
    MultiPoly with_variables(const std::vector<std::string>& superset) const
    {
        auto target = sorted_unique(superset);
        if (target == vars_) return *this;
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
            if (it == target.end() || *it != vars_[i]) {
                throw Error("variable '" + vars_[i] + "' missing from target variable set");
            }
            where[i] = static_cast<std::size_t>(it - target.begin());
        }
        MultiPoly out(target);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Exponents e(target.size(), 0);
            for (std::size_t i = 0; i < vars_.size(); ++i) e[where[i]] = t.exponents[i];
            out.terms_.push_back({std::move(e), t.coefficient});
        }
        return out;
    }

    /// Drops declared variables that do not occur in the support.
    MultiPoly trimmed() const
    {
        auto occ = occurring_variables();
        if (occ.size() == vars_.size()) return *this;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (std::binary_search(occ.begin(), occ.end(), vars_[i])) keep.push_back(i);
        }
        MultiPoly out(occ);
        for (const auto& t : terms_) {
            Exponents e;
            for (auto i : keep) e.push_back(t.exponents[i]);
            out.terms_.push_back({std::move(e), t.coefficient});
        }
        return out;
    }

    MultiPoly operator-() const
    {
        MultiPoly out = *this;
        for (auto& t : out.terms_) t.coefficient = -t.coefficient;
        return out;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.vars_ != b.vars_) {
            auto u = detail::merge_variables(a.vars_, b.vars_);
            return a.with_variables(u) * b.with_variables(u);
        }
        MultiPoly out(a.vars_);
        if (a.is_zero() || b.is_zero()) return out;
        if (a.size() == 1 || b.size() == 1) {
            const MultiPoly& mono = a.size() == 1 ? a : b;
            const MultiPoly& other = a.size() == 1 ? b : a;
            const Term& m = mono.terms_[0];
            out.terms_.reserve(other.size());
            for (const auto& t : other.terms_) {
                Exponents e = t.exponents;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.exponents[i];
                out.terms_.push_back({std::move(e), t.coefficient * m.coefficient});
            }
            // Monomial orders are multiplicative, so the order is preserved.
            return out;
        }
        std::unordered_map<Exponents, BigRational, detail::ExponentsHash> acc;
        acc.reserve(a.size() * b.size() / 2 + 16);
        Exponents e(a.vars_.size());
        BigRational prod;
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ta.exponents[i] + tb.exponents[i];
                prod = ta.coefficient * tb.coefficient;
                auto [it, inserted] = acc.try_emplace(e, prod);
                if (!inserted) it->second += prod;
            }
        }
        out.terms_.reserve(acc.size());
        for (auto& [exp, c] : acc) {
            if (c != 0) out.terms_.push_back({exp, std::move(c)});
        }
        out.sort_terms();
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& a, const BigRational& c)
    {
        MultiPoly out(a.vars_);
        if (c == 0) return out;
        out.terms_ = a.terms_;
        for (auto& t : out.terms_) t.coefficient *= c;
        return out;
    }
    friend MultiPoly operator*(const BigRational& c, const MultiPoly& a) { return a * c; }

    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    /// Equality of term maps; declared-but-unused variables do not matter.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.vars_ == b.vars_) return same_terms(a.terms_, b.terms_);
        auto u = detail::merge_variables(a.vars_, b.vars_);
        return same_terms(a.with_variables(u).terms_, b.with_variables(u).terms_);
    }

    /// Leading term (graded-lex) as a single-term polynomial.
    MultiPoly leading_term() const
    {
        MultiPoly out(vars_);
        if (!terms_.empty()) out.terms_.push_back(terms_.front());
        return out;
    }

private:
    std::vector<std::string> vars_;
    std::vector<Term> terms_;

    static std::vector<std::string> sorted_unique(std::vector<std::string> v)
    {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    static bool same_terms(const std::vector<Term>& a, const std::vector<Term>& b)
    {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].exponents != b[i].exponents || a[i].coefficient != b[i].coefficient) return false;
        }
        return true;
    }

    std::optional<std::size_t> index_of(const std::string& name) const
    {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    void sort_terms()
    {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return detail::grlex_greater(x.exponents, y.exponents); });
    }

    void normalize()
    {
        sort_terms();
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().exponents == t.exponents) {
                merged.back().coefficient += t.coefficient;
            } else {
                merged.push_back(std::move(t));
            }
        }
        std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
        terms_ = std::move(merged);
    }

    static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract)
    {
        if (a.vars_ != b.vars_) {
            auto u = detail::merge_variables(a.vars_, b.vars_);
            return combine(a.with_variables(u), b.with_variables(u), subtract);
        }
        MultiPoly out(a.vars_);
        out.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && detail::grlex_greater(a.terms_[i].exponents, b.terms_[j].exponents))) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || detail::grlex_greater(b.terms_[j].exponents, a.terms_[i].exponents)) {
                Term t = b.terms_[j++];
                if (subtract) t.coefficient = -t.coefficient;
                out.terms_.push_back(std::move(t));
            } else {
                BigRational c = subtract ? BigRational(a.terms_[i].coefficient - b.terms_[j].coefficient)
                                         : BigRational(a.terms_[i].coefficient + b.terms_[j].coefficient);
                if (c != 0) out.terms_.push_back({a.terms_[i].exponents, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }
};

inline MultiPoly pow(const MultiPoly& base, unsigned n)
{
    MultiPoly result = MultiPoly::constant(1, base.variables());
    MultiPoly b = base;
    while (n > 0) {
        if (n & 1u) result = result * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return result;
}

inline Degree total_degree(const MultiPoly& p) { return p.total_degree(); }

inline MultiPoly diff(const MultiPoly& p, const std::string& var)
{
    const auto& vars = p.variables();
    auto it = std::lower_bound(vars.begin(), vars.end(), var);
    if (it == vars.end() || *it != var) return MultiPoly(vars);
    auto idx = static_cast<std::size_t>(it - vars.begin());
    std::vector<MultiPoly::Term> out;
    for (const auto& t : p.terms()) {
        if (t.exponents[idx] == 0) continue;
        MultiPoly::Term d{t.exponents, t.coefficient * BigRational(t.exponents[idx])};
        d.exponents[idx] -= 1;
        out.push_back(std::move(d));
    }
    return MultiPoly::from_terms(vars, std::move(out));
}

/// d(p)/d(v1) * d(q)/d(v2) - d(p)/d(v2) * d(q)/d(v1)
inline MultiPoly jacobian_det(const MultiPoly& p, const MultiPoly& q, const std::string& v1,
                              const std::string& v2)
{
    return diff(p, v1) * diff(q, v2) - diff(p, v2) * diff(q, v1);
}

using Point = std::map<std::string, BigRational>;

inline BigRational evaluate(const MultiPoly& p, const Point& point)
{
    const auto& vars = p.variables();
    std::vector<const BigRational*> values;
    values.reserve(vars.size());
    for (const auto& v : vars) {
        auto it = point.find(v);
        if (it == point.end()) throw UnboundVariable(v);
        values.push_back(&it->second);
    }
    // Powers are cached per variable up to the largest exponent used.
    std::vector<std::vector<BigRational>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::uint32_t maxe = 0;
        for (const auto& t : p.terms()) maxe = std::max(maxe, t.exponents[i]);
        powers[i].reserve(maxe + 1);
        powers[i].emplace_back(1);
        for (std::uint32_t k = 1; k <= maxe; ++k) powers[i].push_back(powers[i].back() * *values[i]);
    }
    BigRational sum = 0;
    BigRational term;
    for (const auto& t : p.terms()) {
        term = t.coefficient;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (t.exponents[i] != 0) term *= powers[i][t.exponents[i]];
        }
        sum += term;
    }
    return sum;
}

namespace detail {

struct FractionBinding {
    std::string variable;
    MultiPoly numerator;
    MultiPoly denominator;  // the constant 1 for polynomial bindings
    unsigned degree = 0;    // homogenizing degree of the variable in the source
    std::vector<MultiPoly> denominator_powers;
};

// Homogeneous Horner evaluation: returns sum over k of N_k * num^k * den^(e-k)
// nested over every bound variable, where N_k are the coefficient
// polynomials. Dividing by prod den^e gives the composition.
inline MultiPoly compose_rec(const MultiPoly& part, std::size_t idx, const std::vector<FractionBinding>& bindings)
{
    if (idx == bindings.size()) return part;
    const auto& b = bindings[idx];
    auto coeffs = part.coefficients_in(b.variable);
    MultiPoly acc;
    bool started = false;
    for (std::size_t k = b.degree + 1; k-- > 0;) {
        if (started && !acc.is_zero()) acc = acc * b.numerator;
        if (k < coeffs.size() && !coeffs[k].is_zero()) {
            MultiPoly nk = compose_rec(coeffs[k], idx + 1, bindings);
            const MultiPoly& dp = b.denominator_powers[b.degree - k];
            acc = acc + (dp.is_one() ? nk : nk * dp);
        }
        started = true;
    }
    return acc;
}

// Returns (numerator, denominator) of p with each bound variable replaced by
// numerator/denominator. Unbound variables pass through.
inline std::pair<MultiPoly, MultiPoly> compose(const MultiPoly& p, std::vector<FractionBinding> bindings)
{
    std::erase_if(bindings, [&](const FractionBinding& b) { return !p.has_variable(b.variable); });
    std::vector<std::string> result_vars;
    for (const auto& v : p.variables()) {
        bool bound = std::any_of(bindings.begin(), bindings.end(),
                                 [&](const FractionBinding& b) { return b.variable == v; });
        if (!bound) result_vars.push_back(v);
    }
    MultiPoly den = MultiPoly::constant(1, result_vars);
    for (auto& b : bindings) {
        Degree d = p.degree_in(b.variable);
        b.degree = d.is_neg_infinity() ? 0 : d.value();
        b.denominator_powers.clear();
        b.denominator_powers.push_back(MultiPoly::constant(1));
        for (unsigned k = 1; k <= b.degree; ++k) {
            b.denominator_powers.push_back(b.denominator_powers.back() * b.denominator);
        }
        if (!b.denominator.is_one()) den = den * b.denominator_powers.back();
    }
    MultiPoly num = compose_rec(p, 0, bindings);
    // Keep the declared variable set independent of which coefficients were
    // nonzero.
    auto all_vars = result_vars;
    for (const auto& b : bindings) {
        all_vars = merge_variables(all_vars, b.numerator.variables());
        all_vars = merge_variables(all_vars, b.denominator.variables());
    }
    return {num.with_variables(merge_variables(all_vars, num.variables())),
            den.with_variables(merge_variables(all_vars, den.variables()))};
}

}  // namespace detail

using Bindings = std::map<std::string, MultiPoly>;

/// Simultaneous substitution; bindings for variables absent from p are ignored.
inline MultiPoly substitute(const MultiPoly& p, const Bindings& bindings)
{
    std::vector<detail::FractionBinding> fb;
    for (const auto& [name, value] : bindings) {
        fb.push_back({name, value, MultiPoly::constant(1), 0, {}});
    }
    return detail::compose(p, std::move(fb)).first;
}

/// Exact quotient a / b; throws InexactDivision when b does not divide a.
inline MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
    auto vars = detail::merge_variables(a.variables(), b.variables());
    MultiPoly rem = a.with_variables(vars);
    MultiPoly div = b.with_variables(vars);
    const auto& lead = div.terms().front();
    std::vector<MultiPoly::Term> quotient;
    while (!rem.is_zero()) {
        const auto& lt = rem.terms().front();
        MultiPoly::Term q{lt.exponents, lt.coefficient / lead.coefficient};
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (lt.exponents[i] < lead.exponents[i]) throw InexactDivision("polynomial division is not exact");
            q.exponents[i] = lt.exponents[i] - lead.exponents[i];
        }
        rem = rem - MultiPoly::from_terms(vars, {q}) * div;
        quotient.push_back(std::move(q));
    }
    return MultiPoly::from_terms(vars, std::move(quotient));
}

}  // namespace pinchuk

#endif  // PINCHUK_MULTIPOLY_HPP
