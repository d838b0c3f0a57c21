#pragma once

#include "opoly/field.hpp"

#include <stdexcept>
#include <string>

namespace opoly {

// Product of Pochhammer symbols, powers and plain factors in which zero
// factors are counted instead of multiplied, so that matched zeros in the
// numerator and denominator cancel.
template <class F>
class TermProduct {
public:
    TermProduct& mul(const F& v) { return factor(v, true); }
    TermProduct& div(const F& v) { return factor(v, false); }
    TermProduct& mul_poch(const F& a, long k) {
        for (long i = 0; i < k; ++i) mul(a + F(i));
        return *this;
    }
    TermProduct& div_poch(const F& a, long k) {
        for (long i = 0; i < k; ++i) div(a + F(i));
        return *this;
    }
    TermProduct& mul_pow(const F& a, long k) {
        for (long i = 0; i < (k < 0 ? -k : k); ++i) factor(a, k > 0);
        return *this;
    }
    TermProduct& mul_factorial(long k) { return mul_poch(F(1), k); }
    TermProduct& div_factorial(long k) { return div_poch(F(1), k); }
    // Gamma(top)/Gamma(bottom) where top - bottom is the integer shift.
    TermProduct& mul_gamma_ratio(const F& bottom, long shift) {
        return shift >= 0 ? mul_poch(bottom, shift) : div_poch(bottom + F(shift), -shift);
    }

    // Throws std::domain_error when more zeros sit in the denominator.
    F value() const {
        if (zeros_ > 0) return F(0);
        if (zeros_ < 0) throw std::domain_error("unmatched zero in a denominator");
        return num_ / den_;
    }

private:
    TermProduct& factor(const F& v, bool up) {
        if (v.is_zero()) {
            zeros_ += up ? 1 : -1;
        } else if (up) {
            num_ *= v;
        } else {
            den_ *= v;
        }
        return *this;
    }
    F num_{1}, den_{1};
    long zeros_ = 0;
};

}  // namespace opoly
