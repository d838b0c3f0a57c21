#pragma once

#include "opoly/polynomial.hpp"
#include "opoly/rational.hpp"

#include <string>

namespace opoly {

// Element of Q(t): numerator/denominator coprime, denominator monic.
class RationalFunction {
public:
    using Poly = Polynomial<Rational>;

    RationalFunction() : num_(), den_(Poly::constant(Rational(1))) {}
    RationalFunction(long v) : RationalFunction(Rational(v)) {}
    RationalFunction(const Rational& v) : num_(Poly::constant(v)), den_(Poly::constant(Rational(1))) {}
    RationalFunction(Poly num, Poly den);

    // The formal parameter t.
    static RationalFunction t() { return RationalFunction(Poly::x(), Poly::constant(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // Throws std::domain_error at a pole.
    Rational eval(const Rational& t0) const;
    RationalFunction derivative() const;
    std::string to_string() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    Poly num_, den_;
};

inline std::string to_string(const RationalFunction& r) { return r.to_string(); }

}  // namespace opoly
