#ifndef PINCHUK_UNIPOLY_HPP
#define PINCHUK_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/errors.hpp"
#include "pinchuk/multipoly.hpp"
#include "pinchuk/rational.hpp"

namespace pinchuk {

/// Dense univariate polynomial, coefficients in ascending degree order.
class UniPoly {
public:
    UniPoly() = default;

    UniPoly(std::string variable, std::vector<BigRational> ascending)
        : var_(std::move(variable)), coeffs_(std::move(ascending))
    {
        trim();
    }

    static UniPoly constant(std::string variable, const BigRational& c) { return UniPoly(std::move(variable), {c}); }

    static UniPoly monomial(std::string variable, unsigned degree, const BigRational& c = 1)
    {
        std::vector<BigRational> v(degree + 1);
        v[degree] = c;
        return UniPoly(std::move(variable), std::move(v));
    }

    /// Lossless conversion from a polynomial in at most one variable.
    /// `variable` names the result when p is constant or to force a name.
    static UniPoly from_multipoly(const MultiPoly& p, std::optional<std::string> variable = std::nullopt)
    {
        auto occ = p.occurring_variables();
        if (occ.size() > 1) throw Error("polynomial is not univariate: " + std::to_string(occ.size()) + " variables");
        std::string name = variable ? *variable
                           : !occ.empty()            ? occ.front()
                           : p.variables().size() == 1 ? p.variables().front()
                                                       : std::string("x");
        if (!occ.empty() && occ.front() != name) {
            throw Error("polynomial variable '" + occ.front() + "' differs from requested '" + name + "'");
        }
        std::vector<BigRational> c;
        auto slices = p.coefficients_in(name);
        c.reserve(slices.size());
        for (const auto& s : slices) c.push_back(s.constant_term());
        return UniPoly(name, std::move(c));
    }

    MultiPoly to_multipoly() const
    {
        std::vector<MultiPoly::Term> terms;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != 0) terms.push_back({{static_cast<std::uint32_t>(k)}, coeffs_[k]});
        }
        return MultiPoly::from_terms({var_}, std::move(terms));
    }

    const std::string& variable() const { return var_; }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Degree degree() const
    {
        return coeffs_.empty() ? Degree::neg_infinity() : Degree(static_cast<unsigned>(coeffs_.size() - 1));
    }

    /// Degree as a plain integer; zero for both constants and the zero polynomial.
    std::size_t size_degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    BigRational leading_coefficient() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

    BigRational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }

    BigRational operator()(const BigRational& x) const
    {
        BigRational acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc *= x;
            acc += coeffs_[k];
        }
        return acc;
    }

    int sign_at(const BigRational& x) const { return sgn((*this)(x)); }
    int sign_at_pos_infinity() const { return coeffs_.empty() ? 0 : sgn(coeffs_.back()); }
    int sign_at_neg_infinity() const
    {
        if (coeffs_.empty()) return 0;
        int s = sgn(coeffs_.back());
        return (coeffs_.size() - 1) % 2 == 0 ? s : -s;
    }

    UniPoly derivative() const
    {
        std::vector<BigRational> d;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * BigRational(k));
        return UniPoly(var_, std::move(d));
    }

    UniPoly monic() const
    {
        if (coeffs_.empty()) return *this;
        BigRational lc = coeffs_.back();
        std::vector<BigRational> c = coeffs_;
        for (auto& v : c) v /= lc;
        return UniPoly(var_, std::move(c));
    }

    /// p(q(x)) with the result in q's variable.
    UniPoly compose(const UniPoly& q) const
    {
        UniPoly acc(q.var_, {});
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + UniPoly(q.var_, {coeffs_[k]});
        return acc;
    }

    UniPoly operator-() const
    {
        UniPoly r = *this;
        for (auto& v : r.coeffs_) v = -v;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
        return UniPoly(pick_var(a, b), std::move(c));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return UniPoly(pick_var(a, b), {});
        std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(pick_var(a, b), std::move(c));
    }

    friend UniPoly operator*(const UniPoly& a, const BigRational& s)
    {
        std::vector<BigRational> c = a.coeffs_;
        for (auto& v : c) v *= s;
        return UniPoly(a.var_, std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b)
    {
        // The zero polynomial and constants compare equal across names.
        if (a.coeffs_.size() > 1 && a.var_ != b.var_) return false;
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::string var_ = "x";
    std::vector<BigRational> coeffs_;

    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    static const std::string& pick_var(const UniPoly& a, const UniPoly& b)
    {
        return a.coeffs_.size() > 1 || b.coeffs_.size() <= 1 ? a.var_ : b.var_;
    }
};

/// Quotient and remainder over the rationals.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw DivisionByZero("univariate division by zero polynomial");
    std::vector<BigRational> r = a.coefficients();
    const auto& d = b.coefficients();
    if (r.size() < d.size()) return {UniPoly(a.variable(), {}), a};
    std::vector<BigRational> q(r.size() - d.size() + 1);
    const BigRational& lc = d.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        BigRational f = r[k + d.size() - 1] / lc;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= f * d[j];
    }
    r.resize(d.size() - 1);
    return {UniPoly(a.variable(), std::move(q)), UniPoly(a.variable(), std::move(r))};
}

inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InexactDivision("univariate division is not exact");
    return q;
}

/// Scales by a positive rational so all coefficients are coprime integers.
/// The sign of every coefficient is preserved.
inline UniPoly primitive_part(const UniPoly& a)
{
    if (a.is_zero()) return a;
    BigInteger lcm_den = 1, g = 0;
    for (const auto& c : a.coefficients()) lcm_den = lcm(lcm_den, BigInteger(c.get_den()));
    std::vector<BigRational> ints;
    ints.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) {
        BigRational v = c * BigRational(lcm_den);
        ints.push_back(v);
        g = gcd(g, BigInteger(v.get_num()));
    }
    for (auto& v : ints) v /= BigRational(g);
    return UniPoly(a.variable(), std::move(ints));
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b; integer-preserving.
inline UniPoly prem(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero polynomial");
    std::vector<BigRational> r = a.coefficients();
    const auto& d = b.coefficients();
    if (r.size() < d.size()) return a;
    const BigRational& lc = d.back();
    std::size_t steps = r.size() - d.size() + 1;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t top = r.size() - 1 - s;
        BigRational f = r[top];
        for (auto& v : r) v *= lc;
        if (f != 0) {
            std::size_t shift = top - (d.size() - 1);
            for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= f * d[j];
        }
    }
    r.resize(d.size() - 1);
    return UniPoly(a.variable(), std::move(r));
}

/// Monic greatest common divisor via the primitive remainder sequence.
inline UniPoly uni_gcd(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("gcd of two zero polynomials is undefined");
    UniPoly x = primitive_part(a), y = primitive_part(b);
    if (x.size_degree() < y.size_degree() || x.is_zero()) std::swap(x, y);
    while (!y.is_zero()) {
        UniPoly r = primitive_part(prem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

struct SquarefreeFactor {
    UniPoly factor;  // monic, nonconstant
    unsigned multiplicity;
};

/// Yun's algorithm. The product of factor^multiplicity equals `a` divided by
/// its leading coefficient; constants yield an empty list.
inline std::vector<SquarefreeFactor> squarefree_decomp(const UniPoly& a)
{
    if (a.is_zero()) throw ZeroPolynomial("square-free decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (a.size_degree() == 0) return out;
    UniPoly f = a.monic();
    UniPoly df = f.derivative();
    UniPoly g = uni_gcd(f, df);
    UniPoly b = exact_quotient(f, g);
    UniPoly c = exact_quotient(df, g);
    UniPoly d = c - b.derivative();
    for (unsigned i = 1; b.size_degree() > 0; ++i) {
        UniPoly ai = uni_gcd(b, d);
        b = exact_quotient(b, ai);
        c = exact_quotient(d, ai);
        d = c - b.derivative();
        if (ai.size_degree() > 0) out.push_back({std::move(ai), i});
    }
    return out;
}

inline UniPoly squarefree_part(const UniPoly& a)
{
    if (a.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
    if (a.size_degree() == 0) return UniPoly::constant(a.variable(), 1);
    return exact_quotient(a.monic(), uni_gcd(a, a.derivative()));
}

/// Signed remainder chain a, a', -rem, ... built from pseudo-remainders with
/// positive rescaling, so the sign pattern matches the classical sequence.
inline std::vector<UniPoly> sturm_sequence(const UniPoly& a)
{
    if (a.is_zero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");
    std::vector<UniPoly> seq{primitive_part(a)};
    UniPoly d = primitive_part(a.derivative());
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        const UniPoly& prev = seq[seq.size() - 2];
        const UniPoly& cur = seq.back();
        UniPoly r = prem(prev, cur);
        if (r.is_zero()) break;
        std::size_t delta = prev.size_degree() - cur.size_degree() + 1;
        bool lc_factor_negative = sgn(cur.leading_coefficient()) < 0 && delta % 2 == 1;
        // rem = prem / lc^delta; the next element is -rem up to a positive factor.
        UniPoly next = lc_factor_negative ? r : -r;
        seq.push_back(primitive_part(next));
    }
    return seq;
}

/// Bound of an interval; nullopt stands for -infinity (lo) or +infinity (hi).
using RealBound = std::optional<BigRational>;

inline unsigned sign_variations(const std::vector<UniPoly>& seq, const RealBound& at, bool at_is_upper)
{
    unsigned v = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = at ? p.sign_at(*at) : (at_is_upper ? p.sign_at_pos_infinity() : p.sign_at_neg_infinity());
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// Number of distinct real roots in the half-open interval (lo, hi].
inline unsigned sturm_count(const std::vector<UniPoly>& seq, const RealBound& lo, const RealBound& hi)
{
    if (lo && hi && *lo >= *hi) {
        if (*lo == *hi) return 0;
        throw InvalidRange("sturm_count requires lo < hi");
    }
    unsigned vlo = sign_variations(seq, lo, false);
    unsigned vhi = sign_variations(seq, hi, true);
    return vlo - vhi;
}

inline unsigned sturm_count(const UniPoly& a, const RealBound& lo = std::nullopt, const RealBound& hi = std::nullopt)
{
    if (a.is_zero()) throw ZeroPolynomial("sturm_count of the zero polynomial");
    return sturm_count(sturm_sequence(a), lo, hi);
}

/// Open interval (lo, hi) containing exactly one real root; endpoints are
/// never roots.
struct RootInterval {
    BigRational lo;
    BigRational hi;
};

/// A power of two strictly larger than the modulus of every root.
inline BigRational root_bound(const UniPoly& a)
{
    BigRational m = 0;
    const auto& c = a.coefficients();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, BigRational(abs(c[k] / c.back())));
    BigRational bound = 1;
    while (bound <= m + 1) bound *= 2;
    return bound;
}

namespace detail {

// Midpoint of (lo, hi) nudged off any exact root of p.
inline BigRational split_point(const UniPoly& p, const BigRational& lo, const BigRational& hi)
{
    BigRational mid = (lo + hi) / 2;
    BigRational step = (hi - lo) / 8;
    while (p.sign_at(mid) == 0) {
        mid += step;
        step /= 2;
    }
    return mid;
}

}  // namespace detail

/// Isolating intervals for the distinct real roots, in increasing order.
inline std::vector<RootInterval> isolate_real_roots(const UniPoly& a)
{
    if (a.is_zero()) throw ZeroPolynomial("root isolation of the zero polynomial");
    std::vector<RootInterval> out;
    if (a.size_degree() == 0) return out;
    UniPoly sf = squarefree_part(a);
    auto seq = sturm_sequence(sf);
    BigRational bound = root_bound(sf);
    struct Pending {
        BigRational lo, hi;
        unsigned count;
    };
    std::vector<Pending> stack;
    unsigned total = sturm_count(seq, BigRational(-bound), bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.count == 1) {
            out.push_back({cur.lo, cur.hi});
            continue;
        }
        BigRational mid = detail::split_point(sf, cur.lo, cur.hi);
        unsigned left = sturm_count(seq, cur.lo, mid);
        // Push right first so the left half is processed first.
        if (cur.count - left > 0) stack.push_back({mid, cur.hi, cur.count - left});
        if (left > 0) stack.push_back({cur.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

/// Shrinks an isolating interval of a square-free p below `width`.
inline RootInterval refine_root(const UniPoly& sf, RootInterval iv, const BigRational& width)
{
    int slo = sf.sign_at(iv.lo);
    while (iv.hi - iv.lo >= width) {
        BigRational mid = detail::split_point(sf, iv.lo, iv.hi);
        if (sf.sign_at(mid) == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

}  // namespace pinchuk

#endif  // PINCHUK_UNIPOLY_HPP
