#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opoly {

enum class Basis { Monomial, FallingFactorial };

inline const char* basis_name(Basis b) { return b == Basis::Monomial ? "monomial" : "falling"; }

// Dense univariate polynomial. coeffs[i] multiplies x^i (Monomial) or
// x(x-1)...(x-i+1) (FallingFactorial). Trailing zeros are always trimmed.
template <class F>
class Polynomial {
public:
    explicit Polynomial(Basis b = Basis::Monomial) : basis_(b) {}
    Polynomial(std::vector<F> c, Basis b = Basis::Monomial) : basis_(b), c_(std::move(c)) { trim(); }

    static Polynomial constant(const F& v, Basis b = Basis::Monomial) { return Polynomial({v}, b); }
    // x^m in the monomial basis or x^(m falling) in the falling basis.
    static Polynomial unit(int m, Basis b = Basis::Monomial) {
        std::vector<F> c(m + 1, F(0));
        c[m] = F(1);
        return Polynomial(std::move(c), b);
    }
    static Polynomial x(Basis b = Basis::Monomial) { return unit(1, b); }

    Basis basis() const { return basis_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
    F leading() const { return c_.empty() ? F(0) : c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        same_basis(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        same_basis(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const F& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
    friend Polynomial operator*(const F& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.same_basis(b);
        if (a.basis_ == Basis::FallingFactorial) {
            auto m = to_monomial(a) * to_monomial(b);
            return to_falling(m);
        }
        if (a.is_zero() || b.is_zero()) return Polynomial(a.basis_);
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r), a.basis_);
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.basis_ == b.basis_ && a.c_ == b.c_;
    }

    template <class X>
    X eval(const X& x) const {
        X r(0);
        if (basis_ == Basis::Monomial) {
            for (size_t i = c_.size(); i-- > 0;) r = r * x + X(c_[i]);
        } else {
            // c0 + x(c1 + (x-1)(c2 + (x-2)(...)))
            for (size_t i = c_.size(); i-- > 0;) r = r * (x - X(static_cast<long>(i))) + X(c_[i]);
        }
        return r;
    }

    // Monomial <-> falling conversions use Horner with the rules
    // x * x^(m falling) = x^(m+1 falling) + m x^(m falling) and
    // x^(m falling) = x^(m-1 falling) (x - m + 1).
    static Polynomial to_falling(const Polynomial& p) {
        if (p.basis_ == Basis::FallingFactorial) return p;
        std::vector<F> r;
        for (size_t i = p.c_.size(); i-- > 0;) {
            std::vector<F> t(r.size() + 1, F(0));
            for (size_t m = 0; m < r.size(); ++m) {
                t[m + 1] += r[m];
                t[m] += r[m] * F(static_cast<long>(m));
            }
            t[0] += p.c_[i];
            r = std::move(t);
        }
        return Polynomial(std::move(r), Basis::FallingFactorial);
    }
    static Polynomial to_monomial(const Polynomial& p) {
        if (p.basis_ == Basis::Monomial) return p;
        std::vector<F> r;
        for (size_t i = p.c_.size(); i-- > 0;) {
            // r <- r * (x - i) + c_i
            std::vector<F> t(r.size() + 1, F(0));
            F shift(-static_cast<long>(i));
            for (size_t m = 0; m < r.size(); ++m) {
                t[m + 1] += r[m];
                t[m] += r[m] * shift;
            }
            t[0] += p.c_[i];
            r = std::move(t);
        }
        return Polynomial(std::move(r), Basis::Monomial);
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void same_basis(const Polynomial& o) const {
        if (basis_ != o.basis_) throw std::invalid_argument("polynomial basis mismatch");
    }

    Basis basis_;
    std::vector<F> c_;
};

template <class F>
Polynomial<F> basis_convert(const Polynomial<F>& p, Basis target) {
    return target == Basis::Monomial ? Polynomial<F>::to_monomial(p) : Polynomial<F>::to_falling(p);
}

template <class F>
Polynomial<F> derivative(const Polynomial<F>& p) {
    if (p.basis() != Basis::Monomial) throw std::invalid_argument("derivative requires the monomial basis");
    std::vector<F> r;
    for (int i = 1; i <= p.degree(); ++i) r.push_back(p.coeff(i) * F(static_cast<long>(i)));
    return Polynomial<F>(std::move(r));
}

// p(x+h) in the basis of p.
template <class F>
Polynomial<F> shift(const Polynomial<F>& p, long h) {
    Polynomial<F> m = basis_convert(p, Basis::Monomial);
    std::vector<F> c = m.coeffs();
    F hh(h);
    // Taylor shift by repeated synthetic division.
    for (size_t k = 0; k + 1 < c.size(); ++k)
        for (size_t i = c.size() - 1; i > k; --i) c[i - 1] += hh * c[i];
    return basis_convert(Polynomial<F>(std::move(c)), p.basis());
}

template <class F>
Polynomial<F> delta(const Polynomial<F>& p) {
    if (p.basis() == Basis::FallingFactorial) {
        std::vector<F> r;
        for (int i = 1; i <= p.degree(); ++i) r.push_back(p.coeff(i) * F(static_cast<long>(i)));
        return Polynomial<F>(std::move(r), Basis::FallingFactorial);
    }
    return shift(p, 1) - p;
}

template <class F>
Polynomial<F> nabla(const Polynomial<F>& p) {
    return p - shift(p, -1);
}

// Quotient and remainder in the monomial basis; divisor must be nonzero.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Polynomial<F>(), a};
    std::vector<F> q(a.degree() - db + 1, F(0));
    F lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        F f = r[i] / lead;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(db);
    return {Polynomial<F>(std::move(q)), Polynomial<F>(std::move(r))};
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    return p * (F(1) / p.leading());
}

template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class F>
std::string to_string(const Polynomial<F>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        F c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += cs + "*";
        if (p.basis() == Basis::Monomial)
            out += i == 1 ? var : var + "^" + std::to_string(i);
        else
            out += var + "_(" + std::to_string(i) + ")";
    }
    return out;
}

}  // namespace opoly
