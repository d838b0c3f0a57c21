#include "opoly/rational_function.hpp"

#include <stdexcept>

namespace opoly {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(t0) / d;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(opoly::derivative(num_) * den_ - num_ * opoly::derivative(den_), den_ * den_);
}

std::string RationalFunction::to_string() const {
    std::string n = opoly::to_string(num_, "t");
    if (den_.degree() == 0) return n;
    return "(" + n + ")/(" + opoly::to_string(den_, "t") + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

}  // namespace opoly
