#pragma once

#include "opoly/hyperterm.hpp"
#include "opoly/oracle.hpp"
#include "opoly/series.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace opoly {

enum class Compat { SameSigma, SameSigmaPlusTau, General };

inline const char* compat_name(Compat c) {
    switch (c) {
        case Compat::SameSigma: return "same-sigma";
        case Compat::SameSigmaPlusTau: return "same-sigma-plus-tau";
        case Compat::General: return "general";
    }
    return "?";
}

template <class F>
struct ConnectionProblem {
    FamilySpec<F> P, Q;
    Compat compat = Compat::General;
    long n = 0;
    F f{0}, g{0};  // sigma-bar = sigma + f x + g when compat is SameSigmaPlusTau
};

template <class F>
struct ConnectionRow {
    long n = 0;
    std::vector<F> coeffs;  // index m, 0 <= m <= n

    bool operator==(const ConnectionRow&) const = default;
};

template <class F>
ConnectionProblem<F> classify(const FamilySpec<F>& P, const FamilySpec<F>& Q, long n) {
    if (P.kind != Q.kind) throw std::invalid_argument("connection between a continuous and a discrete family");
    ConnectionProblem<F> pr{P, Q, Compat::General, n};
    if (P.a == Q.a && P.b == Q.b && P.c == Q.c) {
        pr.compat = Compat::SameSigma;
    } else if (P.kind == Kind::Discrete && P.a == Q.a) {
        F f = Q.b - P.b, g = Q.c - P.c;
        if (Q.d == P.d - f && Q.e == P.e - g) {
            pr.compat = Compat::SameSigmaPlusTau;
            pr.f = f;
            pr.g = g;
        }
    }
    return pr;
}

namespace detail {

// m-recurrence c0 C_m + c1 C_{m+1} + c2 C_{m+2} = 0 for monic P and Q.
template <class F>
std::tuple<F, F, F> connection_m_step(const ConnectionProblem<F>& pr, long mi) {
    const auto &P = pr.P, &Qs = pr.Q;
    const F &a = P.a, &b = P.b, &c = P.c, &d = P.d, &e = P.e;
    const F &D = Qs.d, &E = Qs.e;
    F n(pr.n), m(mi);
    const F one(1), two(2), three(3), four(4);
    if (pr.compat == Compat::SameSigma && P.kind == Kind::Continuous) {
        F c0 = -(m - n) * (a * m + d - a + a * n) * (D + two * a * m) * (D + a + two * a * m) *
               (D + three * a + two * a * m) * (D + two * a * m + two * a) * (D + two * a * m + two * a);
        F X = -d * b * n * D + two * d * a * m * m * b + d * b * D + two * d * a * m * b + two * d * E * n * a +
              d * D * E + two * d * D * b * m - m * b * D * D - e * D * D - four * a * a * m * m * e -
              m * m * a * b * D + b * n * D * a - two * e * D * a - four * a * a * m * e - four * e * D * a * m +
              two * m * m * a * a * E + two * E * a * a * n * n - two * E * a * a * n - m * a * b * D +
              two * m * D * E * a + two * m * E * a * a - b * n * n * D * a;
        F c1 = X * (D + two * a * m + two * a) * (m + one) * (D + a + two * a * m) * (D + three * a + two * a * m);
        F Y = a * b * b * m * m - four * a * a * m * m * c - F(8) * a * a * m * c + two * a * m * b * b -
              four * a * D * m * c + m * b * b * D - four * a * D * c - a * E * E + a * b * b - c * D * D +
              b * E * D - four * a * a * c + b * b * D;
        F c2 = -(D + two * a * m) * (m + one) * (-a * m - two * a + a * n - D + d) * (a * m + a * n + a + D) * Y *
               (m + two);
        return {c0, c1, c2};
    }
    if (pr.compat == Compat::SameSigma) {
        F c0 = (D + two * a * m + two * a) * (D + two * a * m + two * a) * (D + three * a + two * a * m) *
               (D + a + two * a * m) * (D + two * a * m) * (n - m) * (a * n - a + d + a * m);
        F a2 = a * a, a3 = a2 * a, m2 = m * m, n2 = n * n;
        F X = -a * D * d + a * n2 * D * D + two * e * a * D - two * a2 * E * m2 + b * D * D * m -
              two * n * a3 * m2 - two * a3 * n * m - a2 * n * D + a2 * n2 * D - a * n * D * D -
              two * E * a * D * m + four * e * a2 * m + b * a * D * m2 + two * a3 * m2 * n2 + a * D * b * m +
              two * a2 * m * D * n2 - four * a3 * m2 * m - two * a * D * D * m2 - four * a2 * D * m2 * m +
              d * n * D * D - two * a2 * m2 * d - a2 * m * D - D * D * m * a - two * a2 * E * m +
              two * a3 * m * n2 + a * n * d * D - two * a3 * m2 - two * a2 * E * n2 - D * D * d - D * b * d -
              two * a3 * m2 * m2 - two * a2 * m * d + two * D * m * a * n * d + two * a2 * m2 * n * d +
              four * a2 * e * m2 + four * a * e * m * D - two * a * E * n * d + two * a2 * n * d * m -
              two * a2 * m * D * n - three * a * m * D * d - D * m2 * a * d - two * D * b * m * d -
              two * a * m2 * b * d - two * a * m * b * d - F(5) * D * m2 * a2 + two * E * a2 * n - D * E * d -
              D * D * m * d + e * D * D + d * b * n * D + a * n2 * b * D - a * n * b * D;
        F c1 = -(D + two * a * m + two * a) * (D + three * a + two * a * m) * (D + a + two * a * m) * (m + one) * X;
        F Y = four * a2 * c * m2 + two * a2 * E * m2 - b * D * D * m - b * b * a * m2 + two * E * a * D * m -
              b * a * D * m2 + four * D * c * a * m + two * a2 * D + four * a3 * m - two * a * D * b * m +
              four * a3 * m2 * m - D * b * b * m + a * D * D * m2 + two * a2 * D * m2 * m + F(6) * a2 * m * D +
              two * D * D * m * a + four * a2 * E * m + F(6) * a3 * m2 + four * D * c * a - two * b * b * a * m +
              F(8) * a2 * c * m + two * a2 * E - b * b * a + a3 * m2 * m2 + a3 + four * a2 * c - D * b * b -
              b * a * D + D * D * c + a * D * D - b * D * D + a * E * E - D * b * E + two * E * a * D +
              F(6) * D * m2 * a2;
        F c2 = (m + one) * (D + two * a * m) * (D + a * m + a + a * n) * (m + two) * Y * (-a * m - two * a - D + a * n + d);
        return {c0, c1, c2};
    }
    if (pr.compat == Compat::SameSigmaPlusTau) {
        const F &f = pr.f, &g = pr.g;
        F a2 = a * a, a3 = a2 * a, m2 = m * m, n2 = n * n, d2 = d * d, d3 = d2 * d, f2 = f * f;
        F w = -d + f - two * a * m - two * a;
        F c0 = (-d + f - two * a * m) * w * w * (-d + f - a - two * a * m) * (-d + f - three * a - two * a * m) *
               (n - m) * (a * n - a + d + a * m);
        F U = two * e * a2 * m - two * a3 * m2 * n - d3 + two * a2 * g * m + two * e * a * d - a * d2 - b * d2 +
              d2 * b * n + d2 * a * n2 + a2 * n2 * d - two * a2 * n2 * e + two * a2 * n * e - a2 * n * d +
              d * a * n2 * b - a * n * d * b - two * d * a * n * e - two * a * e * f - d * a * n2 * f +
              two * a3 * m2 * n2 + two * a * n * m * d2 - two * a3 * m2 - a * m2 * b * d - a * m * b * d -
              F(7) * a2 * m2 * d - three * a2 * m * d - three * a * m2 * d2 - four * a * m * d2 + f2 * f * m -
              four * a3 * m2 * m - two * a3 * m2 * m2 - a * m * f * b - two * a2 * m * f * n2 +
              two * a2 * n2 * d * m + two * a2 * f * m * n - two * a3 * m * n + two * a3 * n2 * m - m * d3 +
              f * b * a * n + two * d * g * a * n + two * a2 * m2 * n * d + d3 * n + two * a2 * e * m2 +
              a2 * n * f - d * b * n * f - d2 * n * f - a2 * n2 * f - a * n2 * b * f - two * g * a2 * n +
              two * g * a2 * n2 - two * m * f * a * n * d + m * f * d2 + three * f * a * d - two * f2 * a -
              two * f2 * d + two * f * d2 + four * a * m2 * f * d + two * d * e * a * m + d2 * g +
              F(5) * a2 * m * f + F(9) * a2 * m2 * f - m * d2 * b - f * e * d - f * g * d - m * f2 * d +
              F(8) * a * m * f * d + f2 * e - two * a * e * m * f + two * a * d * g * m - two * a * f * g * m -
              four * a2 * d * m2 * m + four * a2 * f * m2 * m + d * f * b + f2 * b * m - three * a * m2 * f2 +
              two * a2 * m2 * g - a * m2 * f * b - F(6) * f2 * a * m + f2 * f;
        // correction found by eliminating C_m(n+1), C_m(n-1) from the cross rules
        U += (two * a * m + d - f) * (two * a * m + two * a + d - f) *
             (a * m2 + a * m - a * n2 + a * n + d * m - d * n + d - f * m - f);
        F c1 = -w * (-d + f - a - two * a * m) * (-d + f - three * a - two * a * m) * (m + one) * U;
        F V = four * e * a2 * m + F(8) * a2 * c * m - two * b * b * a * m + four * a2 * g * m + two * e * a * d +
              four * d * c * a - d * b * b + d2 * c + a * d2 - b * d2 - b * b * a + a * e * e + two * a2 * e +
              two * a2 * d + four * a2 * c + a3 - d * b * e - b * a * d - two * a * e * f + F(6) * a3 * m2 +
              four * a3 * m - a * m2 * b * d - two * a * m * b * d + F(6) * a2 * m2 * d + F(6) * a2 * m * d +
              a * m2 * d2 + two * a * m * d2 + four * a3 * m2 * m + a3 * m2 * m2 - b * b * a * m2 +
              four * a2 * c * m2 - two * a * m * f * b + two * a2 * e * m2 - m * f * d2 - three * f * a * d +
              f2 * a + f2 * d - f * d2 - three * a * m2 * f * d + two * d * e * a * m + d2 * g -
              F(6) * a2 * m * f - F(6) * a2 * m2 * f - m * d2 * b + two * d * g * a - f * e * d -
              two * f * g * a - f * g * d + m * f2 * d - F(6) * a * m * f * d + f2 * e - two * a * e * m * f +
              a * g * g + four * a * d * c * m + two * a * d * g * m - four * a * f * c - two * a * f * g * m +
              f2 * c - two * d * f * c - two * a * e * g + d * b * g + f * b * e - f * b * g +
              two * a2 * d * m2 * m - two * a2 * f * m2 * m - d * b * b * m + f * b * b * m + f2 * b * m +
              a * m2 * f2 + two * a2 * m2 * g + f2 * b - a * m2 * f * b - a * f * b + two * f2 * a * m -
              two * a2 * f + f * b * b + two * a2 * g - four * a * f * c * m;
        F c2 = -(-d + f - two * a * m) * (m + one) * V * (m + two) * (-d + f - a * m - a * n - a) *
               (-a * m - two * a + f + a * n);
        return {c0, c1, c2};
    }
    throw UnsupportedError("no connection recurrence for a general pair; use the oracle");
}

}  // namespace detail

// Connection coefficients from the three-term m-recurrence. The recurrence
// runs on the monic systems; the row is rescaled by k_n / k-bar_m.
template <class F>
ConnectionRow<F> connect_recurrence(const ConnectionProblem<F>& pr) {
    if (pr.compat == Compat::General) throw UnsupportedError("no connection recurrence for a general pair; use the oracle");
    if (pr.n < 0) throw std::invalid_argument("negative degree");
    auto c = detail::iterate_down<F>(pr.n, F(1), [&](long m) { return detail::connection_m_step(pr, m); },
                                     "connect_recurrence");
    F kn = detail::k_checked(pr.P, pr.n, "connect_recurrence");
    for (long m = 0; m <= pr.n; ++m) c[m] *= kn / detail::k_checked(pr.Q, m, "connect_recurrence");
    return {pr.n, std::move(c)};
}

// n-recurrence for monic P and Q with the same sigma, as the triple
// (lo, mid, hi) in lo C_m(n) + mid C_m(n+1) + hi C_m(n+2) = 0. Not offered
// for the sigma + tau branch.
template <class F>
Triple<F> connection_n_recurrence(const ConnectionProblem<F>& pr, long ni, long mi) {
    if (pr.compat != Compat::SameSigma) throw UnsupportedError("n-recurrence needs sigma-bar = sigma");
    const auto &P = pr.P, &Qs = pr.Q;
    const F &a = P.a, &b = P.b, &c = P.c, &d = P.d, &e = P.e;
    const F &D = Qs.d, &E = Qs.e;
    F n(ni), m(mi);
    const F one(1), two(2), four(4);
    F a2 = a * a, a3 = a2 * a, n2 = n * n, m2 = m * m, d2 = d * d;
    if (P.kind == Kind::Continuous) {
        F n0 = -(d + two * a * n) * (d + two * a * n) * (d - a + two * a * n) * (d + two * a * n + two * a) *
               (d + a + two * a * n) * (-m + n + two) * (D + a * m + a + a * n);
        F W = -two * E * a * d - b * d2 * n - two * m * a2 * e + two * m2 * a2 * e + two * a2 * e * n -
              four * E * a2 * n2 + two * D * b * d - two * D * e * a + m * b * d * a - b * d2 + two * e * d * a -
              four * E * a * d * n + two * e * d * a * n - a * b * d * n2 - b * d * n * a + two * a2 * e * n2 -
              m2 * a * b * d - four * E * a2 * n - D * m * b * d + two * D * a * n * b + two * D * a * n2 * b +
              two * D * d * b * n + two * D * m * e * a - E * d2 + D * d * e;
        F n1 = (d - a + two * a * n) * (d + a + two * a * n) * (n + two) * (d + two * a * n) * W;
        F n2c = (d + two * a * n + two * a) * (n + two) * (n + one) * (a * n - a * m + d - D) *
                (a * n + a * m - a + d) *
                (b * e * d - a * e * e - d2 * c - four * a * c * n * d - four * a2 * c * n2 + a * b * b * n2 +
                 n * b * b * d);
        return {n2c, n1, n0};
    }
    F n2c = (d + two * a * n + two * a) * (n + two) *
            (-n2 * a * b * b - d2 * b * n - d * b * e + two * a2 * n2 * e + four * n2 * a2 * c +
             two * d * n2 * n * a2 + d2 * a * n2 - d * b * b * n + a3 * n2 * n2 + d2 * c + a * e * e -
             d * a * n2 * b + two * d * a * n * e + four * d * c * n * a) *
            (n + one) * (a * n - a + d + a * m) * (-a * m - D + a * n + d);
    F Z = -two * e * a * D - two * n * a3 * m2 + e * d * D + two * a3 * n * m + a * m * d2 - a * m2 * d2 +
          d2 * n * D - two * e * a2 * m + a * n2 * d * D - two * a3 * m2 * n2 - two * a2 * m * D * n2 -
          d2 * b * n - a2 * m2 * d - a * n * d * b + two * a2 * n2 * e + two * a3 * m * n2 + F(3) * a2 * n * d +
          F(7) * a2 * n2 * d + a * n * d * D + two * e * a * d - D * m * d2 + four * d * n2 * n * a2 -
          four * a2 * E * n2 - E * d2 + two * a2 * n * e + d2 * D + two * d2 * a * n2 + two * D * b * d +
          two * a3 * n2 * n2 + a * d2 - b * d2 - d * a * n2 * b + a2 * m * d + two * d * a * n * e +
          four * a3 * n2 * n + two * a3 * n2 - two * D * m * a * n * d - two * a2 * m2 * n * d +
          two * a2 * e * m2 + two * a * e * m * D - four * a * E * n * d - two * a * E * d + two * a2 * n * d * m -
          two * a2 * m * D * n - a * m * D * d - D * b * m * d - a * m2 * b * d + a * m * b * d -
          four * E * a2 * n + two * d * b * n * D + two * a * n2 * b * D + two * a * n * b * D + F(3) * a * n * d2;
    F n1 = -(d + two * a * n) * (d - a + two * a * n) * (d + a + two * a * n) * (n + two) * Z;
    F n0 = (d + two * a * n) * (d + two * a * n) * (d + two * a * n + two * a) * (d - a + two * a * n) *
           (d + a + two * a * n) * (-m + n + two) * (D + a * m + a + a * n);
    return {n2c, n1, n0};
}

// Reference connection row: expands P_n in Q_0..Q_n by back-substitution.
template <class F>
ConnectionRow<F> connect_oracle(const FamilySpec<F>& P, const FamilySpec<F>& Q, long n) {
    auto p = oracle_polynomial(P, n);
    std::vector<Polynomial<F>> q;
    for (long m = 0; m <= n; ++m) q.push_back(oracle_polynomial(Q, m));
    auto c = expand_in(p, q);
    c.resize(n + 1, F(0));
    return {n, std::move(c)};
}

// ---------------------------------------------------------------------------
// Closed-form connection and parameter-derivative formulas (rational field).

struct ClosedConnection {
    std::string name;
    std::string from, to;             // catalog names, possibly with -monic
    std::vector<std::string> params;  // every parameter the formula reads
    int step = 1;                     // 2 for sums over Q_{n-2k}
    std::string description;
    // catalog parameters of the source and target families
    std::function<std::map<std::string, Rational>(const std::map<std::string, Rational>&)> from_params, to_params;
    std::function<Rational(long n, long j, const std::map<std::string, Rational>&)> term;
};

const std::vector<ClosedConnection>& closed_connections();
const ClosedConnection& find_closed_connection(const std::string& name);

// Evaluates a registered formula. Unmatched zero Pochhammer factors in a
// denominator make the parameter point inadmissible (AdmissibilityError).
ConnectionRow<Rational> closed_form_connection(const std::string& name, const std::map<std::string, Rational>& params,
                                               long n);

struct ParameterDerivative {
    std::string name;
    std::string family;  // catalog name, possibly with -monic
    std::string param;   // the differentiated parameter
    std::vector<std::string> params;
    std::string description;
    std::function<Rational(long n, long m, const std::map<std::string, Rational>&)> term;
};

const std::vector<ParameterDerivative>& parameter_derivatives();
const ParameterDerivative& find_parameter_derivative(const std::string& name);

// D_m(n) with d/d(param) P_n = sum_m D_m(n) P_m at the given parameter point.
ConnectionRow<Rational> parameter_derivative(const std::string& name, const std::map<std::string, Rational>& params,
                                             long n);

// Reference derivative: builds the family over Q(t) with the parameter
// replaced by t, differentiates each monomial coefficient and expands the
// result at t = value in the same family.
ConnectionRow<Rational> parameter_derivative_oracle(const std::string& family, const std::string& param,
                                                    const std::map<std::string, Rational>& params, long n);

}  // namespace opoly
