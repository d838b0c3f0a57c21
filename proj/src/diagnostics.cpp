#include "opoly/diagnostics.hpp"

#include "opoly/connection.hpp"
#include "opoly/field.hpp"
#include "opoly/oracle.hpp"
#include "opoly/series.hpp"
#include "opoly/structure.hpp"

#include <functional>

namespace opoly {

namespace {

using R = Rational;
using P = Polynomial<R>;
using Par = std::map<std::string, R>;

std::string label(const std::string& name, const Par& p) {
    std::string out = name;
    char sep = ':';
    for (const auto& [k, v] : p) {
        out += sep + k + "=" + v.to_string();
        sep = ',';
    }
    return out;
}

std::string at_nm(const std::string& base, long n, long m) {
    return base + "; n=" + std::to_string(n) + ", m=" + std::to_string(m);
}

R residual3(const std::tuple<R, R, R>& t, const R& c0, const R& c1, const R& c2) {
    return std::get<0>(t) * c0 + std::get<1>(t) * c1 + std::get<2>(t) * c2;
}

R coeff(const std::vector<R>& c, long m) { return m >= 0 && m < static_cast<long>(c.size()) ? c[m] : R(0); }

// Lowest entry of the triple solving target = hi q[n+1] + mid q[n] + lo q[n-1].
R oracle_lo(const P& target, const std::vector<P>& q, long n) {
    auto s = solve_triple(target, q, n);
    if (!s) throw std::logic_error("oracle solve failed");
    return s->values[0];
}

const Par hahn_point{{"alpha", R(1, 2)}, {"beta", R(1, 3)}, {"N", R(37, 3)}};

// Structure entries: printed = shipped / f, or shipped / f^2 where a factor
// sits in the wrong place.
MisprintCheck structure_entry(const std::string& id, const std::string& formula, const std::string& change,
                              const std::function<R(const FamilySpec<R>&, long)>& shipped,
                              const std::function<R(const FamilySpec<R>&, long)>& factor,
                              const std::function<R(const FamilySpec<R>&, const std::vector<P>&, long)>& oracle) {
    auto s = catalog<R>("hahn", hahn_point);
    const long n = 4;
    auto p = oracle_family(s, n + 2);
    MisprintCheck c{id, formula, change, at_nm(label("hahn", hahn_point), n, n - 1)};
    c.corrected = shipped(s, n);
    c.printed = c.corrected / factor(s, n);
    R o = oracle(s, p, n);
    c.printed_residual = c.printed - o;
    c.corrected_residual = c.corrected - o;
    return c;
}

std::vector<P> delta_basis(const std::vector<P>& p) {
    std::vector<P> out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(delta(p[i]));
    return out;
}

}  // namespace

std::vector<MisprintCheck> misprint_checks() {
    std::vector<MisprintCheck> out;

    // ---- discrete structure coefficients
    auto an = [](const FamilySpec<R>& s, long n) { return s.a * R(n); };
    out.push_back(structure_entry(
        "discrete-recurrence-C", "discrete three-term recurrence, C_n",
        "factor (an+d-2a) n missing from the numerator",
        [](const FamilySpec<R>& s, long n) { return recurrence_coeffs(s, n).lo; },
        [an](const FamilySpec<R>& s, long n) { return (an(s, n) + s.d - R(2) * s.a) * R(n); },
        [](const FamilySpec<R>& s, const std::vector<P>& p, long n) {
            // x p_n = a_n p_{n+1} + b_n p_n + c_n p_{n-1} and C_n = A_n c_n
            return oracle_lo(P::x() * p[n], p, n) * recurrence_coeffs(s, n).hi;
        }));
    out.push_back(structure_entry(
        "discrete-derivative-gamma", "discrete rule sigma nabla p_n, gamma_n",
        "factor (d+an-a)(an+d-2a) n printed in the denominator instead of the numerator",
        [](const FamilySpec<R>& s, long n) { return derivative_rule_coeffs(s, n).lo; },
        [an](const FamilySpec<R>& s, long n) {
            R f = (s.d + an(s, n) - s.a) * (an(s, n) + s.d - R(2) * s.a) * R(n);
            return f * f;
        },
        [](const FamilySpec<R>& s, const std::vector<P>& p, long n) {
            return oracle_lo(sigma_poly(s) * nabla(p[n]), p, n);
        }));
    out.push_back(structure_entry(
        "discrete-starred-gamma", "discrete x Delta p_n in Delta p_{n+1}, Delta p_n, Delta p_{n-1}: lowest coefficient",
        "factor n (d+an-a) missing",
        [](const FamilySpec<R>& s, long n) { return neighbour_coeffs(s, n).starred.lo; },
        [an](const FamilySpec<R>& s, long n) { return R(n) * (s.d + an(s, n) - s.a); },
        [](const FamilySpec<R>&, const std::vector<P>& p, long n) {
            return oracle_lo(P::x() * delta(p[n]), delta_basis(p), n - 1);
        }));
    out.push_back(structure_entry(
        "discrete-primed-c", "discrete sigma Delta nabla p_n in Delta p_{n+1}, Delta p_n, Delta p_{n-1}: lowest coefficient",
        "factor (an+d)(d+an-a) n missing",
        [](const FamilySpec<R>& s, long n) { return neighbour_coeffs(s, n).primed.lo; },
        [an](const FamilySpec<R>& s, long n) { return (an(s, n) + s.d) * (s.d + an(s, n) - s.a) * R(n); },
        [](const FamilySpec<R>& s, const std::vector<P>& p, long n) {
            return oracle_lo(sigma_poly(s) * delta(nabla(p[n])), delta_basis(p), n - 1);
        }));
    out.push_back(structure_entry(
        "discrete-hatted-c", "discrete p_n in Delta p_{n+1}, Delta p_n, Delta p_{n-1}: lowest coefficient",
        "factor a n missing",
        [](const FamilySpec<R>& s, long n) { return neighbour_coeffs(s, n).hatted.lo; },
        [an](const FamilySpec<R>& s, long n) { return an(s, n); },
        [](const FamilySpec<R>&, const std::vector<P>& p, long n) { return oracle_lo(p[n], delta_basis(p), n - 1); }));

    // ---- inverse power recurrence: c-bar written as e-bar in six terms
    {
        Par jp{{"alpha", R(1, 2)}, {"beta", R(-1, 3)}};
        auto q = catalog<R>("jacobi-monic", jp);
        const long n = 6, mi = 2;
        auto want = expand_in(P::unit(n), generate(q, n));
        auto t = detail::power_inverse_step(q, n, mi);
        const R &a = q.a, &c = q.c, &d = q.d, &e = q.e;
        R m(mi);
        R six = -R(4) * a * a * m * m - R(4) * a * m * d - R(8) * a * a * m - d * d - R(4) * a * a - R(4) * a * d;
        R pre = -(m + R(2)) * (a * m + a * R(n) + a + d) * (m + R(1)) * (d + R(2) * a * m);
        auto tp = t;
        std::get<2>(tp) += pre * (e - c) * six;
        MisprintCheck ck{"inverse-power-three-term", "three-term recurrence for x^n in a continuous basis, C_{m+2} coefficient",
                         "e-bar in place of c-bar in -4a^2cm^2, -4acmd, -8a^2cm, -d^2c, -4a^2c, -4acd",
                         at_nm(label("jacobi-monic", jp), n, mi)};
        ck.corrected = std::get<2>(t);
        ck.printed = std::get<2>(tp);
        ck.corrected_residual = residual3(t, want[mi], want[mi + 1], want[mi + 2]);
        ck.printed_residual = residual3(tp, want[mi], want[mi + 1], want[mi + 2]);
        out.push_back(ck);
    }

    // ---- two-term inverse recurrences stated under e-bar = 0; they need c-bar = 0
    auto two_term = [](const std::string& id, const std::string& formula, const FamilySpec<R>& q, const std::string& pt,
                       Basis basis, auto step) {
        const long n = 5, mi = n - 2;
        auto want = expand_in(basis_convert(P::unit(n, basis), Basis::Monomial), generate(q, n));
        std::vector<R> c(n + 2, R(0));
        c[n] = R(1);
        for (long m = n - 1; m >= mi; --m) {
            auto [t0, t1, t2] = step(q, n, m);
            c[m] = -(t1 * c[m + 1]) / t0;
        }
        MisprintCheck ck{id, formula, "applied when e-bar = 0; it holds when c-bar = 0", at_nm(pt, n, mi)};
        ck.printed = c[mi];
        ck.corrected = basis == Basis::Monomial ? power_in_basis(q, n).coeffs[mi] : falling_in_basis(q, n).coeffs[mi];
        ck.printed_residual = ck.printed - want[mi];
        ck.corrected_residual = ck.corrected - want[mi];
        return ck;
    };
    out.push_back(two_term("inverse-power-two-term", "two-term recurrence for x^n in a continuous basis",
                           catalog<R>("gegenbauer-monic", {{"alpha", R(1, 3)}}), "gegenbauer-monic:alpha=1/3",
                           Basis::Monomial, [](const FamilySpec<R>& q, long n, long m) {
                               return detail::power_inverse_two_term_step(q, n, m);
                           }));
    out.push_back(two_term("inverse-falling-two-term", "two-term recurrence for x^(n) falling in a discrete basis",
                           catalog<R>("k-family-monic", {{"alpha", R(2)}, {"beta", R(0)}}),
                           "k-family-monic:alpha=2,beta=0", Basis::FallingFactorial,
                           [](const FamilySpec<R>& q, long n, long m) {
                               return detail::falling_inverse_two_term_step(q, n, m);
                           }));

    // ---- discrete connection recurrences
    {
        Par hp2 = hahn_point;
        hp2["beta"] = R(5, 7);
        auto P1 = catalog<R>("hahn-monic", hahn_point), Q1 = catalog<R>("hahn-monic", hp2);
        const long n = 5, mi = 2;
        auto pr = classify(P1, Q1, n);
        auto row = connect_oracle(P1, Q1, n).coeffs;
        auto t = detail::connection_m_step(pr, mi);
        const R &a = P1.a, &d = P1.d, &D = Q1.d;
        R m(mi), N(n);
        R pre = -(D + R(2) * a * m + R(2) * a) * (D + R(3) * a + R(2) * a * m) * (D + a + R(2) * a * m) * (m + R(1));
        auto tp = t;
        std::get<1>(tp) += pre * (a * N * D * D - a * N * d * D);
        MisprintCheck ck{"connection-m-same-sigma", "discrete connection m-recurrence, sigma-bar = sigma, C_{m+1} coefficient",
                         "+a n d-bar d-bar in place of +a n d d-bar",
                         at_nm(label("hahn-monic", hahn_point) + " -> " + label("hahn-monic", hp2), n, mi)};
        ck.corrected = std::get<1>(t);
        ck.printed = std::get<1>(tp);
        ck.corrected_residual = residual3(t, coeff(row, mi), coeff(row, mi + 1), coeff(row, mi + 2));
        ck.printed_residual = residual3(tp, coeff(row, mi), coeff(row, mi + 1), coeff(row, mi + 2));
        out.push_back(ck);

        // n-recurrence, coefficient of C_m(n+1)
        const long nn = 4;
        std::vector<std::vector<R>> rows;
        for (long k = nn; k <= nn + 2; ++k) rows.push_back(connect_oracle(P1, Q1, k).coeffs);
        auto tn = connection_n_recurrence(pr, nn, mi);
        R Nn(nn);
        R pn = -(d + R(2) * a * Nn) * (d - a + R(2) * a * Nn) * (d + a + R(2) * a * Nn) * (Nn + R(2));
        R mid_pr = tn.mid + pn * (D * m * d * d - D * m * m * d * d);
        auto res = [&](const R& mid) {
            return tn.lo * coeff(rows[0], mi) + mid * coeff(rows[1], mi) + tn.hi * coeff(rows[2], mi);
        };
        MisprintCheck cn{"connection-n-same-sigma", "discrete connection n-recurrence, sigma-bar = sigma, C_m(n+1) coefficient",
                         "-d-bar m^2 d^2 in place of -d-bar m d^2",
                         at_nm(label("hahn-monic", hahn_point) + " -> " + label("hahn-monic", hp2), nn, mi)};
        cn.corrected = tn.mid;
        cn.printed = mid_pr;
        cn.corrected_residual = res(tn.mid);
        cn.printed_residual = res(mid_pr);
        out.push_back(cn);
    }
    {
        // a sigma + tau pair with c != 0, so that every printed term is live
        auto P1 = raw_family<R>(Kind::Discrete, R(-1), R(2), R(3), R(-3), R(5));
        R f(1, 2), g(1, 3);
        auto Q1 = raw_family<R>(Kind::Discrete, R(-1), R(2) + f, R(3) + g, R(-3) - f, R(5) - g);
        const long n = 5, mi = 1;
        auto pr = classify(P1, Q1, n);
        auto row = connect_oracle(P1, Q1, n).coeffs;
        auto t = detail::connection_m_step(pr, mi);
        const R &a = P1.a, &c = P1.c, &d = P1.d;
        R m(mi), N(n);
        std::string pt = at_nm("raw:kind=discrete,a=-1,b=2,c=3,d=-3,e=5 -> raw:kind=discrete,a=-1,b=5/2,c=10/3,d=-7/2,e=14/3",
                               n, mi);
        R w = -d + f - R(2) * a * m - R(2) * a;
        R pre1 = -w * (-d + f - a - R(2) * a * m) * (-d + f - R(3) * a - R(2) * a * m) * (m + R(1));
        R corr = (R(2) * a * m + d - f) * (R(2) * a * m + R(2) * a + d - f) *
                 (a * m * m + a * m - a * N * N + a * N + d * m - d * N + d - f * m - f);
        auto tu = t;
        std::get<1>(tu) -= pre1 * corr;
        MisprintCheck cu{"connection-m-sigma-plus-tau-U",
                         "discrete connection m-recurrence, sigma-bar + tau-bar = sigma + tau, C_{m+1} coefficient",
                         "printed polynomial differs from the elimination result by (2am+d-f)(2am+2a+d-f)"
                         "(am^2+am-an^2+an+dm-dn+d-fm-f)",
                         pt};
        cu.corrected = std::get<1>(t);
        cu.printed = std::get<1>(tu);
        cu.corrected_residual = residual3(t, coeff(row, mi), coeff(row, mi + 1), coeff(row, mi + 2));
        cu.printed_residual = residual3(tu, coeff(row, mi), coeff(row, mi + 1), coeff(row, mi + 2));
        out.push_back(cu);

        MisprintCheck cv{"connection-m-sigma-plus-tau-V",
                         "discrete connection m-recurrence, sigma-bar + tau-bar = sigma + tau, C_{m+2} coefficient",
                         "-4afc in place of -4afcm", pt};
        // m = 1 hides the difference; move to m = 2
        const long m2 = 2;
        auto t2 = detail::connection_m_step(pr, m2);
        R M2(m2);
        R pre22 = -(-d + f - R(2) * a * M2) * (M2 + R(1)) * (M2 + R(2)) * (-d + f - a * M2 - a * N - a) *
                  (-a * M2 - R(2) * a + f + a * N);
        auto tv = t2;
        std::get<2>(tv) -= pre22 * R(4) * a * c * f * (R(1) - M2);
        cv.point = at_nm("raw:kind=discrete,a=-1,b=2,c=3,d=-3,e=5 -> raw:kind=discrete,a=-1,b=5/2,c=10/3,d=-7/2,e=14/3",
                         n, m2);
        cv.corrected = std::get<2>(t2);
        cv.printed = std::get<2>(tv);
        cv.corrected_residual = residual3(t2, coeff(row, m2), coeff(row, m2 + 1), coeff(row, m2 + 2));
        cv.printed_residual = residual3(tv, coeff(row, m2), coeff(row, m2 + 1), coeff(row, m2 + 2));
        out.push_back(cv);
    }

    // ---- closed-form connection and parameter derivative
    {
        Par kp{{"alpha", R(2)}, {"beta", R(1, 3)}, {"delta", R(3)}};
        const long n = 4, mi = 1;
        const auto& cc = find_closed_connection("k-family-beta");
        R corrected = closed_form_connection("k-family-beta", kp, n).coeffs[mi];
        R z = pochhammer((kp["alpha"] * R(1 - n) - kp["beta"] + kp["delta"]) / kp["alpha"], mi);
        R o = connect_oracle(catalog<R>(cc.from, cc.from_params(kp)), catalog<R>(cc.to, cc.to_params(kp)), n).coeffs[mi];
        MisprintCheck ck{"k-family-connection", "closed-form connection K(alpha,beta) -> K(alpha,delta)",
                         "Pochhammer ((alpha(1-n)-beta+delta)/alpha)_m in the numerator; it belongs in the denominator",
                         at_nm(label("k-family-beta", kp), n, mi)};
        ck.corrected = corrected;
        ck.printed = corrected * z * z;
        ck.corrected_residual = corrected - o;
        ck.printed_residual = ck.printed - o;
        out.push_back(ck);
    }
    {
        const long n = 4, mi = 1;
        R al = hahn_point.at("alpha"), be = hahn_point.at("beta");
        R corrected = parameter_derivative("hahn-Q-alpha", hahn_point, n).coeffs[mi];
        R o = parameter_derivative_oracle("hahn-Q", "alpha", hahn_point, n).coeffs[mi];
        R s = al + be + R(mi + n + 1);
        MisprintCheck ck{"hahn-Q-alpha-derivative", "d/d alpha of the Q-Hahn polynomial, coefficient of Q_m (m < n)",
                         "factor 1/(alpha+beta+m+n+1) - 1/(alpha+m+1) in place of 1/(alpha+beta+m+n+1)",
                         at_nm(label("hahn-Q", hahn_point), n, mi)};
        ck.corrected = corrected;
        ck.printed = corrected * s * (R(1) / s - R(1) / (al + R(mi + 1)));
        ck.corrected_residual = corrected - o;
        ck.printed_residual = ck.printed - o;
        out.push_back(ck);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Point {
    std::string name;
    Par params;
};

const std::vector<Point>& points() {
    static const std::vector<Point> v{
        {"jacobi", {{"alpha", R(1, 2)}, {"beta", R(-1, 3)}}},
        {"gegenbauer", {{"alpha", R(1, 3)}}},
        {"laguerre", {{"alpha", R(1, 2)}}},
        {"hermite", {}},
        {"bessel", {{"alpha", R(1, 3)}}},
        {"hahn", hahn_point},
        {"hahn-Q", hahn_point},
        {"discrete-chebyshev", {{"N", R(37, 3)}}},
        {"meixner", {{"gamma", R(2)}, {"mu", R(1, 3)}}},
        {"krawtchouk", {{"p", R(1, 3)}, {"N", R(23, 2)}}},
        {"charlier", {{"mu", R(1, 2)}}},
        {"k-family", {{"alpha", R(2)}, {"beta", R(1, 3)}}},
    };
    return v;
}

// One value per parameter name for the connection and derivative registries.
const Par& registry_point() {
    static const Par p{{"alpha", R(1, 2)}, {"beta", R(1, 3)}, {"gamma", R(5, 2)}, {"delta", R(2, 7)},
                       {"N", R(37, 3)},    {"M", R(13, 2)},   {"mu", R(1, 3)},    {"nu", R(2, 3)},
                       {"p", R(1, 3)},     {"q", R(1, 5)}};
    return p;
}

std::string triple_str(const Triple<R>& t) {
    return t.lo.to_string() + ", " + t.mid.to_string() + ", " + t.hi.to_string();
}

std::string row_str(const std::vector<R>& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].to_string();
    return out;
}

class Checker {
public:
    explicit Checker(TranscriptionReport& r) : r_(r) {}
    void triple(const std::string& f, const std::string& pt, long n, const Triple<R>& got,
                const std::optional<LinearSolution<R>>& want) {
        ++r_.checks;
        Triple<R> w;
        if (want) w = {want->values[0], want->values[1], want->values[2]};
        if (!want || !(got == w))
            r_.mismatches.push_back({f, pt, n, 0, triple_str(got), want ? triple_str(w) : "no solution"});
    }
    void row(const std::string& f, const std::string& pt, long n, const std::vector<R>& got, const std::vector<R>& want) {
        ++r_.checks;
        if (got != want) r_.mismatches.push_back({f, pt, n, 0, row_str(got), row_str(want)});
    }
    void poly(const std::string& f, const std::string& pt, long n, const P& got, const P& want) {
        ++r_.checks;
        if (!(got == want)) r_.mismatches.push_back({f, pt, n, 0, to_string(got), to_string(want)});
    }
    template <class Fn>
    void guard(const std::string& f, const std::string& pt, long n, Fn fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            ++r_.checks;
            r_.mismatches.push_back({f, pt, n, 0, std::string("error: ") + e.what(), "value"});
        }
    }

private:
    TranscriptionReport& r_;
};

std::vector<R> padded(std::vector<R> v, long n) {
    v.resize(n + 1, R(0));
    return v;
}

}  // namespace

TranscriptionReport transcription_check(long n_max) {
    TranscriptionReport rep;
    Checker ck(rep);
    const std::string tag = "formula transcription vs oracle: ";
    for (const auto& pt : points()) {
        for (bool monic : {false, true}) {
            std::string name = monic ? pt.name + "-monic" : pt.name;
            std::string where = label(name, pt.params);
            auto s = catalog<R>(name, pt.params);
            const bool cont = s.kind == Kind::Continuous;
            auto p = oracle_family(s, n_max + 1);
            std::vector<P> dp;
            for (size_t i = 1; i < p.size(); ++i) dp.push_back(cont ? derivative(p[i]) : delta(p[i]));
            auto sig = sigma_poly(s);
            for (long n = 1; n <= n_max; ++n) {
                ck.guard(tag + "structure", where, n, [&] {
                    ck.triple(tag + "recurrence", where, n, monic_recurrence_coeffs(s, n),
                              solve_triple(P::x() * p[n], p, n));
                    P lhs = cont ? sig * derivative(p[n]) : sig * nabla(p[n]);
                    ck.triple(tag + "derivative rule", where, n, derivative_rule_coeffs(s, n), solve_triple(lhs, p, n));
                    if (!cont)
                        ck.triple(tag + "delta rule", where, n, delta_rule_coeffs(s, n),
                                  solve_triple((sig + tau_poly(s)) * delta(p[n]), p, n));
                    if (n >= 2 && n + 1 <= n_max) {  // lo is free at n = 1
                        auto t = neighbour_coeffs(s, n);
                        P second = cont ? sig * derivative(derivative(p[n])) : sig * delta(nabla(p[n]));
                        ck.triple(tag + "starred", where, n, t.starred,
                                  solve_triple(P::x() * (cont ? derivative(p[n]) : delta(p[n])), dp, n - 1));
                        ck.triple(tag + "primed", where, n, t.primed, solve_triple(second, dp, n - 1));
                        ck.triple(tag + "hatted", where, n, t.hatted, solve_triple(p[n], dp, n - 1));
                    }
                });
            }
            for (long n = 0; n <= n_max; ++n) {
                ck.guard(tag + "series", where, n, [&] {
                    Basis b = cont ? Basis::Monomial : Basis::FallingFactorial;
                    auto fwd = cont ? power_coeffs(s, n) : falling_coeffs(s, n);
                    ck.poly(tag + (cont ? "power coefficients" : "falling coefficients"), where, n,
                            basis_convert(fwd.polynomial(), Basis::Monomial), p[n]);
                    auto inv = cont ? power_in_basis(s, n) : falling_in_basis(s, n);
                    std::vector<P> q(p.begin(), p.begin() + n + 1);
                    ck.row(tag + (cont ? "power in basis" : "falling in basis"), where, n, inv.coeffs,
                           padded(expand_in(basis_convert(P::unit(n, b), Basis::Monomial), q), n));
                    for (const auto& d : closed_forms(s))
                        ck.poly(tag + "closed form " + d.label, where, n,
                                basis_convert(expand_descriptor(d, n), Basis::Monomial), p[n]);
                });
            }
        }
    }
    const Par& rp = registry_point();
    for (const auto& cc : closed_connections()) {
        Par par;
        for (const auto& k : cc.params) par[k] = rp.at(k);
        std::string where = label(cc.name, par);
        auto P1 = catalog<R>(cc.from, cc.from_params(par)), Q1 = catalog<R>(cc.to, cc.to_params(par));
        auto cls = classify(P1, Q1, 0);
        for (long n = 0; n <= n_max; ++n) {
            ck.guard(tag + "connection", where, n, [&] {
                auto want = connect_oracle(P1, Q1, n).coeffs;
                ck.row(tag + "closed-form connection", where, n, closed_form_connection(cc.name, par, n).coeffs, want);
                if (cls.compat != Compat::General) {
                    cls.n = n;
                    ck.row(tag + std::string("connection recurrence, ") + compat_name(cls.compat), where, n,
                           connect_recurrence(cls).coeffs, want);
                }
            });
        }
    }
    for (const auto& pd : parameter_derivatives()) {
        Par par;
        for (const auto& k : pd.params) par[k] = rp.at(k);
        std::string where = label(pd.name, par);
        for (long n = 0; n <= std::min(n_max, 6L); ++n)
            ck.guard(tag + "parameter derivative", where, n, [&] {
                ck.row(tag + "parameter derivative", where, n, parameter_derivative(pd.name, par, n).coeffs,
                       parameter_derivative_oracle(pd.family, pd.param, par, n).coeffs);
            });
    }
    return rep;
}

}  // namespace opoly
