#ifndef PINCHUK_INTERVAL_HPP
#define PINCHUK_INTERVAL_HPP

#include <algorithm>
#include <map>
#include <string>

#include "pinchuk/multipoly.hpp"
#include "pinchuk/rational.hpp"

namespace pinchuk {

/// Closed interval with exact rational endpoints.
struct Interval {
    BigRational lo;
    BigRational hi;

    static Interval point(const BigRational& v) { return {v, v}; }

    BigRational mid() const { return (lo + hi) / 2; }
    BigRational width() const { return hi - lo; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool strictly_inside(const Interval& outer) const { return outer.lo < lo && hi < outer.hi; }

    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend Interval operator*(const Interval& a, const Interval& b)
    {
        BigRational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }
    friend Interval operator*(const BigRational& c, const Interval& a)
    {
        BigRational x = c * a.lo, y = c * a.hi;
        return x <= y ? Interval{x, y} : Interval{y, x};
    }
};

/// Tight power: even powers of an interval straddling zero start at zero.
inline Interval pow(const Interval& x, unsigned n)
{
    if (n == 0) return Interval::point(1);
    BigRational a = pinchuk::pow(x.lo, n), b = pinchuk::pow(x.hi, n);
    if (n % 2 == 1) return {a, b};
    if (x.contains_zero()) return {0, std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

using Box = std::map<std::string, Interval>;

/// Natural interval extension, term by term.
inline Interval evaluate(const MultiPoly& p, const Box& box)
{
    const auto& vars = p.variables();
    std::vector<const Interval*> iv;
    for (const auto& v : vars) {
        auto it = box.find(v);
        if (it == box.end()) throw UnboundVariable(v);
        iv.push_back(&it->second);
    }
    std::vector<std::map<unsigned, Interval>> cache(vars.size());
    Interval sum = Interval::point(0);
    for (const auto& t : p.terms()) {
        Interval term = Interval::point(t.coefficient);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            unsigned e = t.exponents[i];
            if (e == 0) continue;
            auto [it, fresh] = cache[i].try_emplace(e);
            if (fresh) it->second = pow(*iv[i], e);
            term = term * it->second;
        }
        sum = sum + term;
    }
    return sum;
}

}  // namespace pinchuk

#endif  // PINCHUK_INTERVAL_HPP
