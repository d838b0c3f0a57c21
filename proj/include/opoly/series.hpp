#pragma once

#include "opoly/hyperterm.hpp"
#include "opoly/structure.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace opoly {

class DegenerateError : public AdmissibilityError {
public:
    using AdmissibilityError::AdmissibilityError;
};

template <class F>
struct SeriesCoefficients {
    long n = 0;
    Basis basis = Basis::Monomial;
    std::vector<F> coeffs;  // index m

    Polynomial<F> polynomial() const { return Polynomial<F>(coeffs, basis); }
};

namespace detail {

// Downward iteration of c0(m) C_m + c1(m) C_{m+1} + c2(m) C_{m+2} = 0 from
// C_n = top, C_{n+1} = 0.
template <class F, class Step>
std::vector<F> iterate_down(long n, const F& top, Step step, const char* what) {
    std::vector<F> c(n + 3, F(0));
    c[n] = top;
    for (long m = n - 1; m >= 0; --m) {
        auto [c0, c1, c2] = step(m);
        if (c0.is_zero()) throw DegenerateError(what, m, "leading multiplier");
        c[m] = -(c1 * c[m + 1] + c2 * c[m + 2]) / c0;
    }
    c.resize(n + 1);
    return c;
}

template <class F>
struct Coeff3 {
    F c0, c1, c2;
};

}  // namespace detail

// Monomial coefficients of p_n from the three-term m-recurrence of the
// differential equation.
template <class F>
SeriesCoefficients<F> power_coeffs(const FamilySpec<F>& s, long n) {
    if (s.kind != Kind::Continuous) throw std::invalid_argument("power_coeffs needs a continuous spec");
    const F &a = s.a, &b = s.b, &c = s.c, &d = s.d, &e = s.e;
    F N(n);
    auto step = [&](long mi) {
        F m(mi);
        return detail::Coeff3<F>{(m - N) * (a * N + d - a + a * m), (m + F(1)) * (b * m + e),
                                 c * (m + F(1)) * (m + F(2))};
    };
    return {n, Basis::Monomial,
            detail::iterate_down<F>(n, s.k(n), [&](long m) {
                auto t = step(m);
                return std::tuple<F, F, F>{t.c0, t.c1, t.c2};
            }, "power_coeffs")};
}

// Falling-factorial coefficients by the three-term recurrence.
template <class F>
SeriesCoefficients<F> falling_coeffs_three_term(const FamilySpec<F>& s, long n) {
    if (s.kind != Kind::Discrete) throw std::invalid_argument("falling_coeffs needs a discrete spec");
    const F &a = s.a, &b = s.b, &c = s.c, &d = s.d, &e = s.e;
    F N(n);
    return {n, Basis::FallingFactorial,
            detail::iterate_down<F>(n, s.k(n), [&](long mi) {
                F m(mi);
                return std::tuple<F, F, F>{
                    (a * N + a * m - a + d) * (N - m),
                    (m + F(1)) * (a * N * N - F(2) * a * m * m - a * N - a * m + N * d - F(2) * d * m - b * m - d - e),
                    -(m + F(1)) * (m + F(2)) * (a * m * m + F(2) * a * m + d * m + b * m + a + d + b + c + e)};
            }, "falling_coeffs")};
}

// Two-term recurrence, valid when c = 0.
template <class F>
SeriesCoefficients<F> falling_coeffs_two_term(const FamilySpec<F>& s, long n) {
    if (s.kind != Kind::Discrete) throw std::invalid_argument("falling_coeffs needs a discrete spec");
    if (!s.c.is_zero()) throw UnsupportedError("two-term falling recurrence needs c = 0");
    const F &a = s.a, &b = s.b, &d = s.d, &e = s.e;
    F N(n);
    return {n, Basis::FallingFactorial,
            detail::iterate_down<F>(n, s.k(n), [&](long mi) {
                F m(mi);
                return std::tuple<F, F, F>{(N - m) * (a * m + d + a * N - a),
                                           -(m + F(1)) * (a * m * m + m * b + m * d + e), F(0)};
            }, "falling_coeffs")};
}

template <class F>
SeriesCoefficients<F> falling_coeffs(const FamilySpec<F>& s, long n) {
    if (s.kind == Kind::Discrete && s.c.is_zero()) return falling_coeffs_two_term(s, n);
    return falling_coeffs_three_term(s, n);
}

// ---------------------------------------------------------------------------
// Hypergeometric descriptors

// c0 + c1 n.
template <class F>
struct NAffine {
    F c0{0}, c1{0};
    F at(long n) const { return c0 + c1 * F(n); }
    std::string str() const {
        std::string out;
        if (!c1.is_zero()) {
            std::string k = to_string(c1);
            out = k == "1" ? "n" : (k == "-1" ? "-n" : (k.find('/') != std::string::npos ? "(" + k + ")n" : k + "n"));
        }
        if (!c0.is_zero() || out.empty()) {
            std::string k = to_string(c0);
            if (out.empty()) return k;
            if (k.find_first_of("+-", 1) != std::string::npos || k.find('t') != std::string::npos) k = "(" + k + ")";
            out += k[0] == '-' ? k : "+" + k;
        }
        return out;
    }
};

template <class F>
NAffine<F> nconst(const F& v) {
    return {v, F(0)};
}

enum class ArgKind { Affine, Reciprocal, Constant };

inline const char* arg_kind_name(ArgKind k) {
    switch (k) {
        case ArgKind::Affine: return "affine";
        case ArgKind::Reciprocal: return "reciprocal";
        case ArgKind::Constant: return "unit";
    }
    return "?";
}

// Affine:     z = scale x + offset
// Reciprocal: z = scale / (x + offset)^power, series multiplied by (x + offset)^n
// Constant:   z = scale (discrete forms carrying the upper parameter -x)
template <class F>
struct Argument {
    ArgKind kind = ArgKind::Affine;
    F scale{1}, offset{0};
    int power = 1;
};

enum class FactorType { Pochhammer, Power, Factorial, Constant, Leading };

// One factor of the prefactor, raised to `exponent`:
// Pochhammer (base(n))_n, Power base(n)^n, Factorial n!, Constant base(n),
// Leading k_n of the owning family.
template <class F>
struct PrefactorFactor {
    FactorType type;
    NAffine<F> base;
    long exponent = 1;
};

template <class F>
struct Descriptor {
    std::string label;
    std::vector<NAffine<F>> upper;  // the first entry is -n (or -n/2 for symmetric forms)
    bool minus_x = false;           // extra upper parameter -x (falling basis result)
    std::vector<NAffine<F>> lower;
    Argument<F> argument;
    std::vector<PrefactorFactor<F>> prefactor;
    std::function<F(long)> leading;  // needed only for Leading factors

    Basis basis() const { return minus_x ? Basis::FallingFactorial : Basis::Monomial; }
};

template <class F>
F prefactor_value(const Descriptor<F>& d, long n) {
    TermProduct<F> t;
    for (const auto& f : d.prefactor) {
        F b = f.base.at(n);
        long e = f.exponent;
        switch (f.type) {
            case FactorType::Pochhammer:
                for (long i = 0; i < (e < 0 ? -e : e); ++i) e > 0 ? t.mul_poch(b, n) : t.div_poch(b, n);
                break;
            case FactorType::Power: t.mul_pow(b, n * e); break;
            case FactorType::Factorial:
                for (long i = 0; i < (e < 0 ? -e : e); ++i) e > 0 ? t.mul_factorial(n) : t.div_factorial(n);
                break;
            case FactorType::Constant: t.mul_pow(b, e); break;
            case FactorType::Leading: t.mul_pow(d.leading(n), e); break;
        }
    }
    try {
        return t.value();
    } catch (const std::domain_error&) {
        throw DegenerateError(d.label, n, "prefactor denominator");
    }
}

inline std::string render_prefactor_factor(const std::string& body, long e) {
    if (e == 1) return body;
    return body + "^" + std::to_string(e);
}

template <class F>
std::string prefactor_string(const Descriptor<F>& d) {
    std::string out;
    for (const auto& f : d.prefactor) {
        std::string body;
        switch (f.type) {
            case FactorType::Pochhammer: body = "(" + f.base.str() + ")_n"; break;
            case FactorType::Power: body = "(" + f.base.str() + ")^n"; break;
            case FactorType::Factorial: body = "n!"; break;
            case FactorType::Constant: body = "(" + f.base.str() + ")"; break;
            case FactorType::Leading: body = "k_n"; break;
        }
        if (!out.empty()) out += " * ";
        out += render_prefactor_factor(body, f.exponent);
    }
    return out.empty() ? "1" : out;
}

// Expands the terminating series for degree n. Continuous descriptors give
// a monomial-basis polynomial, discrete ones a falling-basis polynomial.
template <class F>
Polynomial<F> expand_descriptor(const Descriptor<F>& d, long n) {
    std::vector<F> up, lo;
    for (const auto& u : d.upper) up.push_back(u.at(n));
    for (const auto& l : d.lower) lo.push_back(l.at(n));
    // termination index: smallest j with some upper parameter equal to -j
    long K = -1;
    for (const auto& u : up) {
        auto iv = integer_value(u);
        if (iv && *iv <= 0 && (K < 0 || -*iv < K)) K = -*iv;
    }
    if (K < 0) throw DegenerateError(d.label, n, "non-terminating series");
    const Basis basis = d.basis();
    Polynomial<F> sum(basis);
    F term(1);
    const auto& arg = d.argument;
    Polynomial<F> z(basis);
    Polynomial<F> base(basis);
    if (arg.kind == ArgKind::Affine) z = Polynomial<F>({arg.offset, arg.scale});
    if (arg.kind == ArgKind::Reciprocal) base = Polynomial<F>({arg.offset, F(1)});
    for (long k = 0; k <= K; ++k) {
        if (k > 0) {
            F ratio(1);
            for (const auto& u : up) ratio *= u + F(k - 1);
            for (const auto& l : lo) {
                F v = l + F(k - 1);
                if (v.is_zero()) throw DegenerateError(d.label, n, "lower parameter hits zero");
                ratio /= v;
            }
            term *= ratio / F(k);
        }
        if (term.is_zero()) continue;
        switch (arg.kind) {
            case ArgKind::Affine: {
                Polynomial<F> zk = Polynomial<F>::constant(F(1));
                for (long i = 0; i < k; ++i) zk *= z;
                sum += zk * term;
                break;
            }
            case ArgKind::Reciprocal: {
                long deg = n - arg.power * k;
                if (deg < 0) throw DegenerateError(d.label, n, "reciprocal argument beyond degree");
                Polynomial<F> bp = Polynomial<F>::constant(F(1));
                for (long i = 0; i < deg; ++i) bp *= base;
                sum += bp * (term * power(arg.scale, k));
                break;
            }
            case ArgKind::Constant: {
                F c = term * power(arg.scale, k);
                if (d.minus_x) c *= power(F(-1), k);
                sum += Polynomial<F>::unit(k, basis) * c;
                break;
            }
        }
    }
    return sum * prefactor_value(d, n);
}

template <class F>
std::optional<F> field_sqrt(const F& v) {
    auto c = constant_value(v);
    if (!c) return std::nullopt;
    auto r = c->sqrt();
    if (!r) return std::nullopt;
    return F(*r);
}

namespace detail {

template <class F>
PrefactorFactor<F> leading_factor() {
    return {FactorType::Leading, nconst(F(1)), 1};
}

template <class F>
Descriptor<F> base_descriptor(const FamilySpec<F>& s, std::string label) {
    Descriptor<F> d;
    d.label = std::move(label);
    d.leading = s.leading.k;
    d.prefactor.push_back(leading_factor<F>());
    return d;
}

// Forward form at the origin for a continuous spec with c = 0.
template <class F>
Descriptor<F> continuous_forward(const FamilySpec<F>& s) {
    const F &a = s.a, &b = s.b, &d = s.d, &e = s.e;
    auto D = base_descriptor(s, "forward");
    D.upper.push_back({F(0), F(-1)});
    D.argument.kind = ArgKind::Affine;
    if (!a.is_zero()) {
        D.upper.push_back({d / a - F(1), F(1)});  // n - 1 + d/a
        D.prefactor.push_back({FactorType::Pochhammer, {d / a - F(1), F(1)}, -1});
        if (!b.is_zero()) {
            D.lower.push_back(nconst(e / b));
            D.argument.scale = -a / b;
            D.prefactor.push_back({FactorType::Pochhammer, nconst(e / b), 1});
            D.prefactor.push_back({FactorType::Power, nconst(b / a), 1});
        } else {
            if (e.is_zero()) throw UnsupportedError("forward form needs e != 0 when b = 0");
            D.argument.scale = -a / e;
            D.prefactor.push_back({FactorType::Power, nconst(e / a), 1});
        }
    } else if (!b.is_zero()) {
        D.lower.push_back(nconst(e / b));
        D.argument.scale = -d / b;
        D.prefactor.push_back({FactorType::Pochhammer, nconst(e / b), 1});
        D.prefactor.push_back({FactorType::Power, nconst(b / d), 1});
    } else {
        if (e.is_zero()) throw UnsupportedError("forward form needs e != 0 when a = b = 0");
        D.argument.scale = -d / e;
        D.prefactor.push_back({FactorType::Power, nconst(e / d), 1});
    }
    return D;
}

// Form in powers of 1/x for a continuous spec with c = 0.
template <class F>
Descriptor<F> continuous_reversed(const FamilySpec<F>& s) {
    const F &a = s.a, &b = s.b, &d = s.d, &e = s.e;
    auto D = base_descriptor(s, "reversed");
    D.upper.push_back({F(0), F(-1)});
    D.argument.kind = ArgKind::Reciprocal;
    D.argument.offset = F(0);
    if (!b.is_zero()) D.upper.push_back({F(1) - e / b, F(-1)});  // 1 - n - e/b
    if (!a.is_zero()) {
        D.lower.push_back({F(2) - d / a, F(-2)});  // 2 - 2n - d/a
        D.argument.scale = b.is_zero() ? e / a : -b / a;
    } else {
        D.argument.scale = b.is_zero() ? -e / d : b / d;
    }
    return D;
}

// Form in powers of 1/x^2 for b = e = 0.
template <class F>
Descriptor<F> continuous_symmetric(const FamilySpec<F>& s) {
    const F &a = s.a, &c = s.c, &d = s.d;
    auto D = base_descriptor(s, "symmetric");
    D.upper.push_back({F(0), -F(1) / F(2)});
    D.upper.push_back({F(1) / F(2), -F(1) / F(2)});
    D.argument.kind = ArgKind::Reciprocal;
    D.argument.power = 2;
    if (!a.is_zero()) {
        D.lower.push_back({F(3) / F(2) - d / (F(2) * a), F(-1)});
        D.argument.scale = -c / a;
    } else {
        D.argument.scale = F(2) * c / d;
    }
    return D;
}

}  // namespace detail

// The hypergeometric form at the origin (c = 0 required).
template <class F>
Descriptor<F> closed_form(const FamilySpec<F>& s) {
    if (!s.c.is_zero())
        throw UnsupportedError("no power-basis closed form at the origin for c != 0");
    if (s.kind == Kind::Continuous) return detail::continuous_forward(s);
    const F &a = s.a, &b = s.b, &d = s.d, &e = s.e;
    auto D = detail::base_descriptor(s, "forward");
    D.upper.push_back({F(0), F(-1)});
    D.minus_x = true;
    D.argument.kind = ArgKind::Constant;
    if (!a.is_zero()) {
        // a m^2 + (b+d) m + e = a (m + r1)(m + r2)
        F disc = (b + d) * (b + d) - F(4) * a * e;
        auto root = field_sqrt(disc);
        if (!root) throw UnsupportedError("irrational lower parameters; use the recurrence coefficients");
        F r1 = ((b + d) + *root) / (F(2) * a), r2 = ((b + d) - *root) / (F(2) * a);
        D.upper.push_back({d / a - F(1), F(1)});
        D.lower = {nconst(r1), nconst(r2)};
        D.argument.scale = F(1);
        D.prefactor.push_back({FactorType::Pochhammer, nconst(r1), 1});
        D.prefactor.push_back({FactorType::Pochhammer, nconst(r2), 1});
        D.prefactor.push_back({FactorType::Pochhammer, {d / a - F(1), F(1)}, -1});
    } else if (!(b + d).is_zero()) {
        D.lower.push_back(nconst(e / (b + d)));
        D.argument.scale = d / (b + d);
        D.prefactor.push_back({FactorType::Pochhammer, nconst(e / (b + d)), 1});
        D.prefactor.push_back({FactorType::Power, nconst((b + d) / d), 1});
    } else {
        if (e.is_zero()) throw UnsupportedError("closed form needs e != 0 when d = -b");
        D.argument.scale = d / e;
        D.prefactor.push_back({FactorType::Power, nconst(e / d), 1});
    }
    return D;
}

// Rational roots of sigma (continuous specs with a != 0).
template <class F>
std::vector<F> sigma_rational_roots(const FamilySpec<F>& s) {
    if (s.a.is_zero()) return {};
    F disc = s.b * s.b - F(4) * s.a * s.c;
    auto root = field_sqrt(disc);
    if (!root) return {};
    F r1 = (-s.b + *root) / (F(2) * s.a), r2 = (-s.b - *root) / (F(2) * s.a);
    if (r1 == r2) return {r1};
    return {r1, r2};
}

// Every closed form the spec admits: forward and reversed at the origin
// (c = 0), the symmetric form (b = e = 0), and forward/reversed forms
// developed at each nonzero rational root r of sigma through x = s u + r,
// s being the distance to the other root.
template <class F>
std::vector<Descriptor<F>> closed_forms(const FamilySpec<F>& s) {
    std::vector<Descriptor<F>> out;
    auto attempt = [&](auto fn) {
        try {
            out.push_back(fn());
        } catch (const UnsupportedError&) {
        }
    };
    if (s.kind == Kind::Discrete) {
        attempt([&] { return closed_form(s); });
        return out;
    }
    if (s.c.is_zero()) {
        attempt([&] { return detail::continuous_forward(s); });
        attempt([&] { return detail::continuous_reversed(s); });
    }
    if (s.b.is_zero() && s.e.is_zero() && !s.c.is_zero()) attempt([&] { return detail::continuous_symmetric(s); });
    {
        auto roots = sigma_rational_roots(s);
        for (size_t i = 0; i < roots.size(); ++i) {
            F r = roots[i];
            if (r.is_zero()) continue;  // the origin forms above
            F sc = roots.size() == 2 ? roots[1 - i] - r : F(1);
            auto u = affine_change(s, sc, r);
            std::string at = "root " + to_string(r);
            attempt([&] {
                auto D = detail::continuous_forward(u);
                // z = scale u = (scale/sc) x - scale r/sc
                D.argument.offset = -D.argument.scale * r / sc;
                D.argument.scale = D.argument.scale / sc;
                D.label = "forward at " + at;
                return D;
            });
            attempt([&] {
                auto D = detail::continuous_reversed(u);
                // u^n F(mu/u) = sc^-n (x - r)^n F(mu sc/(x - r))
                D.argument.scale = D.argument.scale * sc;
                D.argument.offset = -r;
                D.prefactor.push_back({FactorType::Power, nconst(F(1) / sc), 1});
                D.label = "reversed at " + at;
                return D;
            });
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inverse problems: x^n or x^(n falling) in a family basis.

namespace detail {

template <class F>
std::vector<F> scale_by_leading(std::vector<F> c, const FamilySpec<F>& q) {
    for (size_t m = 0; m < c.size(); ++m) c[m] /= k_checked(q, static_cast<long>(m), "inverse");
    return c;
}

}  // namespace detail

namespace detail {

// (t0, t1, t2) of t0 C_m + t1 C_{m+1} + t2 C_{m+2} = 0 for x^n in the monic Q-basis.
template <class F>
std::tuple<F, F, F> power_inverse_step(const FamilySpec<F>& q, long n, long mi) {
    const F &a = q.a, &b = q.b, &c = q.c, &d = q.d, &e = q.e;
    F N(n), m(mi);
    F t0 = (N - m) * (d + F(2) * a * m) * (d + F(3) * a + F(2) * a * m) * (d + a + F(2) * a * m) *
           (d + F(2) * a * m + F(2) * a) * (d + F(2) * a * m + F(2) * a);
    F t1 = (d * e + b * d + F(2) * d * b * m + F(2) * a * m * m * b + F(2) * a * m * b + F(2) * e * a * N - d * b * N) *
           (d + F(2) * a * m + F(2) * a) * (m + F(1)) * (d + F(3) * a + F(2) * a * m) * (d + a + F(2) * a * m);
    F poly = -F(4) * a * a * c * m * m + a * b * b * m * m + F(2) * a * b * b * m - F(4) * a * c * m * d -
             F(8) * a * a * c * m + m * b * b * d - a * e * e - d * d * c + b * e * d - F(4) * a * a * c -
             F(4) * a * c * d + a * b * b + b * b * d;
    F t2 = -(m + F(2)) * poly * (a * m + a * N + a + d) * (m + F(1)) * (d + F(2) * a * m);
    return {t0, t1, t2};
}

// Two-term steps; they hold when c = 0.
template <class F>
std::tuple<F, F, F> power_inverse_two_term_step(const FamilySpec<F>& q, long n, long mi) {
    const F &a = q.a, &b = q.b, &d = q.d, &e = q.e;
    F N(n), m(mi);
    return {(N - m) * (d + F(2) * a * m) * (d + a + F(2) * a * m), (m + F(1)) * (b * m + e) * (a * m + N * a + d),
            F(0)};
}

template <class F>
std::tuple<F, F, F> falling_inverse_two_term_step(const FamilySpec<F>& q, long n, long mi) {
    const F &a = q.a, &b = q.b, &d = q.d, &e = q.e;
    F N(n), m(mi);
    return {(d + a + F(2) * a * m) * (d + F(2) * a * m) * (m - N),
            -(a * N + d + a * m) * (m + F(1)) * (a * m * m + m * d + m * b + e), F(0)};
}

}  // namespace detail

// Three-term m-recurrence for x^n = sum C_m Q_m (monic Q), rescaled by 1/k_m.
template <class F>
SeriesCoefficients<F> power_in_basis_three_term(const FamilySpec<F>& q, long n) {
    if (q.kind != Kind::Continuous) throw std::invalid_argument("power_in_basis needs a continuous spec");
    auto c3 = detail::iterate_down<F>(n, F(1), [&](long m) { return detail::power_inverse_step(q, n, m); },
                                      "power_in_basis");
    return {n, Basis::Monomial, detail::scale_by_leading(std::move(c3), q)};
}

// Two-term recurrence, valid when c = 0.
template <class F>
SeriesCoefficients<F> power_in_basis_two_term(const FamilySpec<F>& q, long n) {
    if (q.kind != Kind::Continuous) throw std::invalid_argument("power_in_basis needs a continuous spec");
    if (!q.c.is_zero()) throw UnsupportedError("two-term power recurrence needs c = 0");
    auto c2 = detail::iterate_down<F>(n, F(1), [&](long m) { return detail::power_inverse_two_term_step(q, n, m); },
                                      "power_in_basis");
    return {n, Basis::Monomial, detail::scale_by_leading(std::move(c2), q)};
}

// Hypergeometric closed form, valid when c = 0 and a b != 0.
template <class F>
SeriesCoefficients<F> power_in_basis_closed(const FamilySpec<F>& q, long n) {
    if (q.kind != Kind::Continuous) throw std::invalid_argument("power_in_basis needs a continuous spec");
    const F &a = q.a, &b = q.b, &c = q.c, &d = q.d, &e = q.e;
    if (!c.is_zero() || a.is_zero() || b.is_zero()) throw UnsupportedError("closed power form needs c = 0, a b != 0");
    F N(n);
    std::vector<F> out;
    for (long m = 0; m <= n; ++m) {
        TermProduct<F> t;
        t.mul_poch(e / b, n).div_poch(d / a, n).mul_pow(-b / a, n);
        t.mul_poch(F(-n), m).mul_poch(d / (F(2) * a), m).mul_poch((a + d) / (F(2) * a), m);
        t.div_poch(e / b, m).div_poch((a * N + d) / a, m).div_factorial(m);
        t.mul_pow(F(4) * a / b, m);
        try {
            out.push_back(t.value());
        } catch (const std::domain_error&) {
            throw DegenerateError("power_in_basis_closed", m, "Pochhammer denominator");
        }
    }
    return {n, Basis::Monomial, detail::scale_by_leading(std::move(out), q)};
}

template <class F>
SeriesCoefficients<F> power_in_basis(const FamilySpec<F>& q, long n) {
    if (q.c.is_zero()) {
        if (!q.a.is_zero() && !q.b.is_zero()) {
            try {
                return power_in_basis_closed(q, n);
            } catch (const DegenerateError&) {
            }
        }
        return power_in_basis_two_term(q, n);
    }
    return power_in_basis_three_term(q, n);
}

template <class F>
SeriesCoefficients<F> falling_in_basis_three_term(const FamilySpec<F>& q, long n) {
    if (q.kind != Kind::Discrete) throw std::invalid_argument("falling_in_basis needs a discrete spec");
    const F &a = q.a, &b = q.b, &c = q.c, &d = q.d, &e = q.e;
    F N(n);
    auto c3 = detail::iterate_down<F>(n, F(1), [&](long mi) {
        F m(mi);
        F t0 = (F(2) * m * a + a + d) * (F(2) * m * a + F(3) * a + d) * (F(2) * m * a + F(2) * a + d) *
               (F(2) * m * a + F(2) * a + d) * (F(2) * m * a + d) * (N - m);
        F t1 = (F(2) * m * a + a + d) * (F(2) * m * a + F(3) * a + d) * (F(2) * m * a + F(2) * a + d) * (m + F(1)) *
               (F(2) * m * m * N * a * a - F(2) * m * m * a * a + m * m * a * d + F(2) * m * m * a * b +
                F(2) * m * N * a * a + F(2) * m * N * a * d - F(2) * m * a * a - m * a * d + F(2) * m * a * b +
                m * d * d + F(2) * m * d * b + N * a * d + F(2) * N * a * e - N * d * b - a * d + d * b + d * e);
        F m2 = m * m, m3 = m2 * m, m4 = m3 * m;
        F poly = m4 * a * a * a + F(4) * m3 * a * a * a + F(2) * m3 * a * a * d + F(6) * m2 * a * a * a +
                 F(6) * m2 * a * a * d + F(4) * m2 * a * a * c + F(2) * m2 * a * a * e + m2 * a * d * d -
                 m2 * a * d * b - m2 * a * b * b + F(4) * m * a * a * a + F(6) * m * a * a * d +
                 F(8) * m * a * a * c + F(4) * m * a * a * e + F(2) * m * a * d * d - F(2) * m * a * d * b +
                 F(4) * m * a * d * c + F(2) * m * a * d * e - F(2) * m * a * b * b - m * d * d * b -
                 m * d * b * b + a * a * a + F(2) * a * a * d + F(4) * a * a * c + F(2) * a * a * e + a * d * d -
                 a * d * b + F(4) * a * d * c + F(2) * a * d * e - a * b * b + a * e * e - d * d * b + d * d * c -
                 d * b * b - d * b * e;
        F t2 = (m + F(1)) * (F(2) * m * a + d) * poly * (m + F(2)) * (m * a + N * a + a + d);
        return std::tuple<F, F, F>{t0, t1, t2};
    }, "falling_in_basis");
    return {n, Basis::FallingFactorial, detail::scale_by_leading(std::move(c3), q)};
}

template <class F>
SeriesCoefficients<F> falling_in_basis_two_term(const FamilySpec<F>& q, long n) {
    if (q.kind != Kind::Discrete) throw std::invalid_argument("falling_in_basis needs a discrete spec");
    if (!q.c.is_zero()) throw UnsupportedError("two-term falling recurrence needs c = 0");
    auto c2 = detail::iterate_down<F>(n, F(1), [&](long m) { return detail::falling_inverse_two_term_step(q, n, m); },
                                      "falling_in_basis");
    return {n, Basis::FallingFactorial, detail::scale_by_leading(std::move(c2), q)};
}

template <class F>
SeriesCoefficients<F> falling_in_basis(const FamilySpec<F>& q, long n) {
    if (q.kind == Kind::Discrete && q.c.is_zero()) return falling_in_basis_two_term(q, n);
    return falling_in_basis_three_term(q, n);
}

}  // namespace opoly
