#ifndef PINCHUK_POLYTEXT_HPP
#define PINCHUK_POLYTEXT_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "pinchuk/multipoly.hpp"
#include "pinchuk/unipoly.hpp"

namespace pinchuk {

// Text format: terms in descending graded-lex order, each `num/den*x^a*y^b`,
// with `/1`, `^1` and unit coefficients elided, joined by " + " / " - ".
// The zero polynomial prints as "0".

inline std::string to_string(const MultiPoly& p)
{
    if (p.is_zero()) return "0";
    const auto& vars = p.variables();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool negative = sgn(t.coefficient) < 0;
        BigRational mag = abs(t.coefficient);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (t.exponents[i] != 1) mono += "^" + std::to_string(t.exponents[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

inline std::string to_string(const UniPoly& p) { return to_string(p.to_multipoly()); }

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    MultiPoly parse()
    {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial text");
        MultiPoly sum;
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                break;
            }
            first = false;
            MultiPoly term = parse_term();
            sum = sign < 0 ? sum - term : sum + term;
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') {
                throw ParseError(std::string("unexpected character '") + peek() + "' in polynomial text");
            }
        }
        skip_ws();
        if (!at_end()) throw ParseError("trailing characters in polynomial text");
        return sum;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string digits()
    {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
        if (d.empty()) throw ParseError("expected digits in polynomial text");
        return d;
    }

    MultiPoly parse_term()
    {
        MultiPoly prod = parse_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            prod = prod * parse_factor();
        }
        return prod;
    }

    MultiPoly parse_factor()
    {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInteger num(digits(), 10);
            skip_ws();
            BigInteger den = 1;
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                den = BigInteger(digits(), 10);
                if (den == 0) throw ParseError("zero denominator in polynomial text");
            }
            BigRational q(num, den);
            q.canonicalize();
            return MultiPoly::constant(q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                name.push_back(get());
            }
            skip_ws();
            unsigned e = 1;
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = static_cast<unsigned>(std::stoul(digits()));
            }
            return pow(MultiPoly::variable(name), e);
        }
        throw ParseError(at_end() ? std::string("unexpected end of polynomial text")
                                  : std::string("unexpected character '") + c + "' in polynomial text");
    }
};

}  // namespace detail

/// Parses the text format above (any product of rational and `var^k`
/// factors is accepted per term). The result's variable set is the union of
/// `variables` and the names that occur.
inline MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables = {})
{
    MultiPoly p = detail::PolyParser(text).parse().trimmed();
    return p.with_variables(detail::merge_variables(p.variables(), MultiPoly(variables).variables()));
}

}  // namespace pinchuk

#endif  // PINCHUK_POLYTEXT_HPP
