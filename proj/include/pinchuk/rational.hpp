#ifndef PINCHUK_RATIONAL_HPP
#define PINCHUK_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pinchuk/errors.hpp"

namespace pinchuk {

/// Exact rational scalar. GMP keeps every value canonical: the denominator is
/// positive and coprime to the numerator after each operation.
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline int sign(const BigRational& q) { return sgn(q); }

/// num/den in lowest terms.
inline BigRational make_rational(long num, long den)
{
    if (den == 0) throw DivisionByZero("zero denominator");
    BigRational q{BigInteger(num), BigInteger(den)};
    q.canonicalize();
    return q;
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
inline std::string to_string(const BigRational& q) { return q.get_str(); }

/// Parses `n`, `n/d`, or a plain decimal such as `-2.25`.
inline BigRational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw ParseError("empty rational literal");

    auto is_int = [](std::string_view v) {
        std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
        }
        return true;
    };
    auto to_mpz = [](std::string_view v) {
        if (!v.empty() && v[0] == '+') v.remove_prefix(1);
        return BigInteger(std::string(v), 10);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string_view num(s.data(), slash);
        std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
        if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
            throw ParseError("malformed rational literal '" + s + "'");
        }
        BigInteger d = to_mpz(den);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        BigRational q(to_mpz(num), d);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || !is_int(whole) || !is_int(frac) || frac[0] == '-' || frac[0] == '+') {
            throw ParseError("malformed decimal literal '" + s + "'");
        }
        BigInteger scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        BigRational q(BigInteger(whole + frac, 10), scale);
        q.canonicalize();
        return negative ? BigRational(-q) : q;
    }
    if (!is_int(s)) throw ParseError("malformed rational literal '" + s + "'");
    return BigRational(to_mpz(s));
}

/// Decimal rendering rounded half away from zero to `digits` places; trailing
/// zeros are dropped. Only used at output boundaries.
inline std::string to_decimal(const BigRational& q, unsigned digits)
{
    BigInteger scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInteger num = abs(q.get_num()) * scale;
    BigInteger den = q.get_den();
    BigInteger quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) ++quot;

    std::string body = quot.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string whole = body.substr(0, body.size() - digits);
    std::string frac = body.substr(body.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();

    std::string out = (sgn(q) < 0 && (quot != 0)) ? "-" : "";
    out += whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

inline BigRational pow(const BigRational& base, unsigned exponent)
{
    BigRational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r;
}

}  // namespace pinchuk

#endif  // PINCHUK_RATIONAL_HPP
