#pragma once

#include "opoly/rational.hpp"
#include "opoly/rational_function.hpp"

#include <optional>
#include <stdexcept>

namespace opoly {

// (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
template <class F>
F pochhammer(const F& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer with negative length");
    F r(1);
    for (long i = 0; i < k; ++i) r *= a + F(i);
    return r;
}

// a^k for any integer k; a must be nonzero when k < 0.
template <class F>
F power(const F& a, long k) {
    F r(1);
    F base = k < 0 ? F(1) / a : a;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r *= base;
    return r;
}

template <class F>
F factorial(long k) {
    return pochhammer(F(1), k);
}

// Binomial with integer lower index and field-valued top.
template <class F>
F binomial(const F& top, long k) {
    if (k < 0) return F(0);
    return pochhammer(top - F(k - 1), k) / factorial<F>(k);
}

inline std::optional<Rational> constant_value(const Rational& v) { return v; }
inline std::optional<Rational> constant_value(const RationalFunction& v) {
    if (!v.is_constant()) return std::nullopt;
    return v.num().coeff(0);
}

// Value as a machine integer when the element is a constant integer.
template <class F>
std::optional<long> integer_value(const F& v) {
    auto c = constant_value(v);
    if (!c || !c->fits_long()) return std::nullopt;
    return c->to_long();
}

}  // namespace opoly
