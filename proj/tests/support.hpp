#ifndef PINCHUK_TESTS_SUPPORT_HPP
#define PINCHUK_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pinchuk/multipoly.hpp"
#include "pinchuk/rational.hpp"

namespace pinchuk::testkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    BigRational rational(long max_num = 20, long max_den = 9)
    {
        return make_rational(integer(-max_num, max_num), integer(1, max_den));
    }

    BigRational nonzero_rational(long max_num = 20, long max_den = 9)
    {
        BigRational r = rational(max_num, max_den);
        return r == 0 ? BigRational(1) : r;
    }

    // Dense-ish random polynomial with total degree <= max_degree.
    MultiPoly poly(const std::vector<std::string>& vars, unsigned max_degree, unsigned terms)
    {
        MultiPoly p = MultiPoly::constant(0, vars);
        for (unsigned k = 0; k < terms; ++k) {
            Monomial m;
            unsigned budget = static_cast<unsigned>(integer(0, max_degree));
            for (const auto& v : vars) {
                unsigned e = static_cast<unsigned>(integer(0, budget));
                m.set(v, e);
                budget -= e;
            }
            p += MultiPoly::monomial(m, rational()).with_variables(vars);
        }
        return p;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace pinchuk::testkit

#endif  // PINCHUK_TESTS_SUPPORT_HPP
