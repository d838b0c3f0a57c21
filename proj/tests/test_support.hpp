#pragma once

#include "opoly/polynomial.hpp"
#include "opoly/rational.hpp"

#include <random>

namespace opoly::test {

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}
    Rational rational(long span = 40) {
        std::uniform_int_distribution<long> num(-span, span), den(1, span);
        return Rational(num(gen_), den(gen_));
    }
    Polynomial<Rational> poly(int degree) {
        std::vector<Rational> c;
        for (int i = 0; i <= degree; ++i) c.push_back(rational());
        if (c.back().is_zero()) c.back() = Rational(1);
        return Polynomial<Rational>(std::move(c));
    }

private:
    std::mt19937 gen_;
};

}  // namespace opoly::test
