#pragma once

#include "opoly/family.hpp"

#include <map>
#include <string>
#include <vector>

namespace opoly {

// Coefficients multiplying p_{n-1}, p_n, p_{n+1} (or their derivatives or
// differences) in a three-term structure relation.
template <class F>
struct Triple {
    F lo{0}, mid{0}, hi{0};
    friend bool operator==(const Triple& x, const Triple& y) {
        return x.lo == y.lo && x.mid == y.mid && x.hi == y.hi;
    }
};

// x p_n', sigma p_n'' and p_n in p'_{n+1}, p'_n, p'_{n-1} (Delta and
// Delta nabla in the discrete case).
template <class F>
struct NeighbourCoeffs {
    Triple<F> starred, primed, hatted;
};

namespace detail {

template <class F>
F checked(const F& v, const char* formula, long n, const char* expr) {
    if (v.is_zero()) throw AdmissibilityError(formula, n, expr);
    return v;
}

template <class F>
F k_checked(const FamilySpec<F>& s, long n, const char* formula) {
    try {
        F k = s.k(n);
        if (k.is_zero()) throw AdmissibilityError(formula, n, "k_n");
        return k;
    } catch (const std::domain_error&) {
        throw AdmissibilityError(formula, n, "k_n (undefined)");
    }
}

// The two denominators of the explicit formulas at n, checked for zero.
template <class F>
struct Dens {
    F two;   // product of the first two factors (B, beta family)
    F four;  // the squared-factor product (C, gamma family)
};

template <class F>
Dens<F> dens(const FamilySpec<F>& s, long n, const char* formula) {
    auto d = denominators(s, n);
    checked(d.f1, formula, n, d.n1);
    checked(d.f2, formula, n, d.n2);
    checked(d.f3, formula, n, d.n3);
    checked(d.f4, formula, n, d.n4);
    if (s.kind == Kind::Continuous) return {d.f1 * d.f2, d.f2 * d.f2 * d.f3 * d.f4};
    return {d.f1 * d.f2, d.f3 * d.f4 * d.f2 * d.f2};
}

// The common quartic numerator factor of C_n, gamma_n and the neighbour
// lo-coefficients.
template <class F>
F quartic(const FamilySpec<F>& s, long n) {
    const F &a = s.a, &b = s.b, &c = s.c, &d = s.d, &e = s.e;
    F N(n);
    if (s.kind == Kind::Continuous)
        return (N - F(1)) * (a * N + d - a) * (F(4) * c * a - b * b) + a * e * e + d * d * c - b * e * d;
    return (N - F(1)) * (d + a * N - a) *
               (a * N * d - d * b - a * d + a * a * N * N - F(2) * a * a * N + F(4) * c * a + a * a +
                F(2) * e * a - b * b) -
           d * b * e + d * d * c + a * e * e;
}

}  // namespace detail

// (A_n, B_n, C_n) of p_{n+1} = (A_n x + B_n) p_n - C_n p_{n-1}, stored as
// hi = A_n, mid = B_n, lo = C_n. C_0 is returned as zero.
template <class F>
Triple<F> recurrence_coeffs(const FamilySpec<F>& s, long n) {
    const F &a = s.a, &b = s.b, &c = s.c, &d = s.d, &e = s.e;
    F N(n);
    F k0 = detail::k_checked(s, n, "recurrence");
    F k1 = detail::k_checked(s, n + 1, "recurrence");
    Triple<F> t;
    t.hi = k1 / k0;
    if (n == 0) {
        detail::checked(d, "recurrence", 0, "d");
        t.mid = e * k1 / (d * k0);
        return t;
    }
    F km = detail::k_checked(s, n - 1, "recurrence");
    auto den = detail::dens(s, n, "recurrence");
    if (s.kind == Kind::Continuous) {
        t.mid = (F(2) * b * N * (a * N + d - a) - e * (F(2) * a - d)) / den.two * k1 / k0;
        F inner = (a * N + d - F(2) * a) * N * (F(4) * c * a - b * b) + F(4) * a * a * c - a * b * b + a * e * e -
                  F(4) * a * c * d + d * b * b - b * e * d + d * d * c;
        t.lo = -(inner * (a * N + d - F(2) * a) * N) / den.four * k1 / km;
    } else {
        t.mid = (N * (d + F(2) * b) * (d + a * N - a) + e * (d - F(2) * a)) / den.two * k1 / k0;
        t.lo = -detail::quartic(s, n) * (a * N + d - F(2) * a) * N / den.four * k1 / km;
    }
    return t;
}

// Monic-form coefficients of x p_n = a_n p_{n+1} + b_n p_n + c_n p_{n-1}:
// a_n = 1/A_n, b_n = -B_n/A_n, c_n = C_n/A_n.
template <class F>
Triple<F> monic_recurrence_coeffs(const FamilySpec<F>& s, long n) {
    auto r = recurrence_coeffs(s, n);
    return {r.lo / r.hi, -r.mid / r.hi, F(1) / r.hi};
}

// (alpha_n, beta_n, gamma_n) of sigma p'_n (continuous) or sigma nabla p_n
// (discrete) = alpha p_{n+1} + beta p_n + gamma p_{n-1}.
template <class F>
Triple<F> derivative_rule_coeffs(const FamilySpec<F>& s, long n) {
    const F &a = s.a, &b = s.b, &d = s.d, &e = s.e;
    F N(n);
    F k0 = detail::k_checked(s, n, "derivative");
    F k1 = detail::k_checked(s, n + 1, "derivative");
    Triple<F> t;
    t.hi = a * N * k0 / k1;
    if (n == 0) return t;
    F km = detail::k_checked(s, n - 1, "derivative");
    auto den = detail::dens(s, n, "derivative");
    F Q = detail::quartic(s, n);
    if (s.kind == Kind::Continuous) {
        t.mid = -N * (a * N + d - a) * (F(2) * e * a - d * b) / den.two;
        t.lo = Q * (a * N + d - a) * (a * N + d - F(2) * a) * N / den.four * k0 / km;
    } else {
        t.mid = -N * (d + a * N - a) *
                (F(2) * a * N * d - a * d - d * b + F(2) * e * a - F(2) * a * a * N + F(2) * a * a * N * N) /
                den.two;
        t.lo = Q * (d + a * N - a) * (a * N + d - F(2) * a) * N / den.four * k0 / km;
    }
    return t;
}

// (S_n, T_n, R_n) of (sigma + tau) Delta p_n = S p_{n+1} + T p_n + R p_{n-1}.
template <class F>
Triple<F> delta_rule_coeffs(const FamilySpec<F>& s, long n) {
    if (s.kind != Kind::Discrete) throw std::invalid_argument("delta rule needs a discrete spec");
    auto t = derivative_rule_coeffs(s, n);
    t.mid -= lambda_n(s, n);
    return t;
}

template <class F>
NeighbourCoeffs<F> neighbour_coeffs(const FamilySpec<F>& s, long n) {
    const F &a = s.a, &b = s.b, &d = s.d, &e = s.e;
    F N(n);
    F k0 = detail::k_checked(s, n, "neighbour_coeffs");
    F k1 = detail::k_checked(s, n + 1, "neighbour_coeffs");
    F r01 = k0 / k1;
    NeighbourCoeffs<F> t;
    t.starred.hi = N / (N + F(1)) * r01;
    t.primed.hi = a * N * (N - F(1)) / (N + F(1)) * r01;
    t.hatted.hi = F(1) / (N + F(1)) * r01;
    if (n == 0) return t;
    F km = detail::k_checked(s, n - 1, "neighbour_coeffs");
    F r0m = k0 / km;
    auto den = detail::dens(s, n, "neighbour_coeffs");
    F Q = detail::quartic(s, n);
    if (s.kind == Kind::Continuous) {
        F w = F(2) * e * a - d * b;
        t.starred.mid = (-F(2) * b * N * (a * N + d - a) + d * (b - e)) / den.two;
        t.starred.lo = -Q * N * (a * N + d - a) / den.four * r0m;
        t.primed.mid = -(N - F(1)) * (a * N + d) * w / den.two;
        t.primed.lo = Q * (a * N + d) * (a * N + d - a) * N / den.four * r0m;
        t.hatted.mid = w / den.two;
        t.hatted.lo = Q * a * N / den.four * r0m;
    } else {
        F w = F(2) * a * N * d - a * d - d * b + F(2) * e * a - F(2) * a * a * N + F(2) * a * a * N * N;
        t.starred.mid =
            (-N * (d + F(2) * a + F(2) * b) * (d + a * N - a) - d * (e - a - b)) / den.two;
        t.starred.lo = -Q * N * (d + a * N - a) / den.four * r0m;
        t.primed.mid = -(N - F(1)) * (a * N + d) * w / den.two;
        t.primed.lo = Q * (a * N + d) * (d + a * N - a) * N / den.four * r0m;
        t.hatted.mid = (-F(2) * a * N * (d + a * N - a) - d * b + a * d - d * d + F(2) * e * a) / den.two;
        t.hatted.lo = Q * a * N / den.four * r0m;
    }
    return t;
}

// The family of derivatives q_m = p'_{m+1} (or Delta p_{m+1}): parameters
// (a, b, c, d+2a, e+b) continuous or (a, b, c, d+2a, d+e+a+b) discrete,
// leading coefficient (m+1) k_{m+1}.
template <class F>
FamilySpec<F> derivative_family(const FamilySpec<F>& s) {
    FamilySpec<F> q = s;
    q.d = s.d + F(2) * s.a;
    q.e = s.kind == Kind::Continuous ? s.e + s.b : s.d + s.e + s.a + s.b;
    auto base = s.leading.k;
    q.leading = {"(n+1) k_{n+1}", [base](long m) { return F(m + 1) * base(m + 1); }};
    q.name = s.name + "'";
    return q;
}

// Starred triple by substitution: the monic recurrence of the derivative
// family at index n-1. Its lo entry at n = 1 multiplies p'_0 = 0 and is
// returned as zero.
template <class F>
Triple<F> starred_by_substitution(const FamilySpec<F>& s, long n) {
    return monic_recurrence_coeffs(derivative_family(s), n - 1);
}

// p_0 .. p_{n_max} in the monomial basis via the three-term recurrence.
template <class F>
std::vector<Polynomial<F>> generate(const FamilySpec<F>& s, long n_max) {
    std::vector<Polynomial<F>> p;
    p.push_back(Polynomial<F>::constant(detail::k_checked(s, 0, "generate")));
    const auto x = Polynomial<F>::x();
    for (long n = 0; n < n_max; ++n) {
        auto r = recurrence_coeffs(s, n);
        Polynomial<F> next = (x * r.hi + Polynomial<F>::constant(r.mid)) * p[n];
        if (n > 0) next -= p[n - 1] * r.lo;
        p.push_back(std::move(next));
    }
    return p;
}

// Coefficients of the antiderivative (continuous) or antidifference
// (discrete) of p_n as hi p_{n+1} + mid p_n + lo p_{n-1}.
template <class F>
Triple<F> antiderivative(const FamilySpec<F>& s, long n) {
    if (s.kind != Kind::Continuous) throw std::invalid_argument("antiderivative needs a continuous spec");
    return neighbour_coeffs(s, n).hatted;
}
template <class F>
Triple<F> antidifference(const FamilySpec<F>& s, long n) {
    if (s.kind != Kind::Discrete) throw std::invalid_argument("antidifference needs a discrete spec");
    return neighbour_coeffs(s, n).hatted;
}

template <class F>
Polynomial<F> combine(const Triple<F>& t, const Polynomial<F>& lo, const Polynomial<F>& mid,
                      const Polynomial<F>& hi) {
    return hi * t.hi + mid * t.mid + lo * t.lo;
}

template <class F>
Polynomial<F> apply_operator(const FamilySpec<F>& s, const Polynomial<F>& y, long n) {
    auto sig = sigma_poly(s), ta = tau_poly(s);
    auto lam = Polynomial<F>::constant(lambda_n(s, n)) * y;
    if (s.kind == Kind::Continuous) return sig * derivative(derivative(y)) + ta * derivative(y) + lam;
    return sig * delta(nabla(y)) + ta * delta(y) + lam;
}

struct ResidualEntry {
    std::string relation;
    long n;
    std::string residual;  // "0" when the identity holds
    bool pass;
};

struct StructureReport {
    bool ok = true;
    std::vector<ResidualEntry> entries;
};

// Exact residuals of the differential/difference equation, the recurrence,
// the derivative/difference rules and the starred, primed and hatted
// relations for 1 <= n <= n_max - 1.
template <class F>
StructureReport verify_structure(const FamilySpec<F>& s, long n_max) {
    StructureReport rep;
    auto p = generate(s, n_max);
    const bool cont = s.kind == Kind::Continuous;
    auto D = [&](const Polynomial<F>& y) { return cont ? derivative(y) : delta(y); };
    auto x = Polynomial<F>::x();
    auto sig = sigma_poly(s);
    auto add = [&](const std::string& rel, long n, const Polynomial<F>& r) {
        bool pass = r.is_zero();
        rep.ok = rep.ok && pass;
        rep.entries.push_back({rel, n, pass ? "0" : to_string(r), pass});
    };
    for (long n = 1; n <= n_max - 1; ++n) {
        const auto &lo = p[n - 1], &mid = p[n], &hi = p[n + 1];
        add("equation", n, apply_operator(s, mid, n));
        auto r = recurrence_coeffs(s, n);
        add("recurrence", n, hi - (x * r.hi + Polynomial<F>::constant(r.mid)) * mid + lo * r.lo);
        auto dr = derivative_rule_coeffs(s, n);
        Polynomial<F> lhs = cont ? sig * derivative(mid) : sig * nabla(mid);
        add("derivative", n, lhs - combine(dr, lo, mid, hi));
        if (!cont) {
            auto sr = delta_rule_coeffs(s, n);
            add("delta", n, (sig + tau_poly(s)) * delta(mid) - combine(sr, lo, mid, hi));
        }
        auto t1 = neighbour_coeffs(s, n);
        auto dlo = D(lo), dmid = D(mid), dhi = D(hi);
        add("starred", n, x * dmid - combine(t1.starred, dlo, dmid, dhi));
        Polynomial<F> second = cont ? sig * derivative(derivative(mid)) : sig * delta(nabla(mid));
        add("primed", n, second - combine(t1.primed, dlo, dmid, dhi));
        add("hatted", n, mid - combine(t1.hatted, dlo, dmid, dhi));
    }
    return rep;
}

}  // namespace opoly
