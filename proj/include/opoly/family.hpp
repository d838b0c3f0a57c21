#pragma once

#include "opoly/field.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opoly {

enum class Kind { Continuous, Discrete };

inline const char* kind_name(Kind k) { return k == Kind::Continuous ? "continuous" : "discrete"; }

template <class F>
struct LeadingRule {
    std::string name;  // "monic" or a display form such as "2^n"
    std::function<F(long)> k;
};

// sigma(x) = a x^2 + b x + c, tau(x) = d x + e, leading coefficient k_n.
template <class F>
struct FamilySpec {
    Kind kind = Kind::Continuous;
    F a{0}, b{0}, c{0}, d{0}, e{0};
    LeadingRule<F> leading;
    std::string name;
    std::vector<std::pair<std::string, F>> params;

    F k(long n) const { return leading.k(n); }
    bool is_monic() const { return leading.name == "monic"; }
};

template <class F>
LeadingRule<F> monic_rule() {
    return {"monic", [](long) { return F(1); }};
}

template <class F>
F lambda_n(const FamilySpec<F>& s, long n) {
    return -(s.a * F(n) * F(n - 1) + s.d * F(n));
}

// sigma and tau as monomial-basis polynomials.
template <class F>
Polynomial<F> sigma_poly(const FamilySpec<F>& s) {
    return Polynomial<F>({s.c, s.b, s.a});
}
template <class F>
Polynomial<F> tau_poly(const FamilySpec<F>& s) {
    return Polynomial<F>({s.e, s.d});
}

enum class Formula { Recurrence, Derivative, Delta, Starred, Primed, Hatted };

inline const char* formula_name(Formula f) {
    switch (f) {
        case Formula::Recurrence: return "recurrence";
        case Formula::Derivative: return "derivative";
        case Formula::Delta: return "delta";
        case Formula::Starred: return "starred";
        case Formula::Primed: return "primed";
        case Formula::Hatted: return "hatted";
    }
    return "?";
}

inline const std::set<Formula>& all_formulas() {
    static const std::set<Formula> s{Formula::Recurrence, Formula::Derivative, Formula::Delta,
                                     Formula::Starred,    Formula::Primed,     Formula::Hatted};
    return s;
}

struct AdmissibilityFailure {
    std::string formula;
    long n;
    std::string expression;
};

struct AdmissibilityReport {
    bool ok = true;
    std::vector<AdmissibilityFailure> failures;
};

class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
    AdmissibilityError(const std::string& formula, long n, const std::string& expr)
        : std::runtime_error(formula + ": vanishing " + expr + " at n=" + std::to_string(n)),
          failure{formula, n, expr} {}
    AdmissibilityFailure failure;
};

// Raised when a closed form does not exist for the spec (e.g. c != 0).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The four linear factors shared by every explicit coefficient formula,
// evaluated at n. Continuous: d+2an, d-2a+2an, 2an-3a+d, 2an-a+d.
// Discrete: d+2an, 2an-2a+d, d-a+2an, d+2an-3a.
template <class F>
struct Denominators {
    F f1, f2, f3, f4;
    const char* n1;
    const char* n2;
    const char* n3;
    const char* n4;
};

template <class F>
Denominators<F> denominators(const FamilySpec<F>& s, long n) {
    F an = s.a * F(n);
    if (s.kind == Kind::Continuous)
        return {s.d + F(2) * an, s.d - F(2) * s.a + F(2) * an, F(2) * an - F(3) * s.a + s.d,
                F(2) * an - s.a + s.d, "d+2an", "d-2a+2an", "2an-3a+d", "2an-a+d"};
    return {s.d + F(2) * an, F(2) * an - F(2) * s.a + s.d, s.d - s.a + F(2) * an,
            s.d + F(2) * an - F(3) * s.a, "d+2an", "2an-2a+d", "d-a+2an", "d+2an-3a"};
}

namespace detail {
template <class F>
bool k_defined(const FamilySpec<F>& s, long n, std::string& why) {
    try {
        if (s.k(n).is_zero()) {
            why = "k_n";
            return false;
        }
    } catch (const std::domain_error&) {
        why = "k_n (undefined)";
        return false;
    }
    return true;
}
}  // namespace detail

// Reports every vanishing denominator of the requested formulas for
// 0 <= n <= n_max, plus any k_n that vanishes or is undefined for n <= n_max+1.
template <class F>
AdmissibilityReport admissibility(const FamilySpec<F>& s, long n_max,
                                  const std::set<Formula>& formulas = all_formulas()) {
    AdmissibilityReport r;
    auto fail = [&](const std::string& f, long n, const std::string& e) {
        r.ok = false;
        r.failures.push_back({f, n, e});
    };
    if (s.d.is_zero()) fail("tau", 0, "d");
    for (long n = 0; n <= n_max + 1; ++n) {
        std::string why;
        if (!detail::k_defined(s, n, why)) fail("leading", n, why);
    }
    for (Formula f : formulas) {
        for (long n = 0; n <= n_max; ++n) {
            if (n == 0) {
                // Only the cancelled B_0 = e k_1/(d k_0) is ever evaluated at n = 0.
                continue;
            }
            if (f == Formula::Delta && s.kind == Kind::Continuous) continue;
            auto den = denominators(s, n);
            if (den.f1.is_zero()) fail(formula_name(f), n, den.n1);
            if (den.f2.is_zero()) fail(formula_name(f), n, den.n2);
            if (den.f3.is_zero()) fail(formula_name(f), n, den.n3);
            if (den.f4.is_zero()) fail(formula_name(f), n, den.n4);
        }
    }
    return r;
}

template <class F>
void require_admissible(const FamilySpec<F>& s, long n_max, const std::set<Formula>& formulas = all_formulas()) {
    auto rep = admissibility(s, n_max, formulas);
    if (!rep.ok) {
        const auto& f = rep.failures.front();
        throw AdmissibilityError(f.formula, f.n, f.expression);
    }
}

struct CatalogEntry {
    std::string name;
    Kind kind;
    std::vector<std::string> params;
    std::string leading;
};

const std::vector<CatalogEntry>& catalog_entries();

// Builds a named family; "<name>-monic" gives the monic variant.
// Throws std::invalid_argument for unknown names, missing parameters, or
// parameters that make d or k_n vanish.
template <class F>
FamilySpec<F> catalog(const std::string& name, const std::map<std::string, F>& params);

// A monic spec straight from (a, b, c, d, e).
template <class F>
FamilySpec<F> raw_family(Kind kind, F a, F b, F c, F d, F e) {
    if (d.is_zero()) throw std::invalid_argument("parameters make tau constant (d = 0)");
    FamilySpec<F> s;
    s.kind = kind;
    s.a = std::move(a);
    s.b = std::move(b);
    s.c = std::move(c);
    s.d = std::move(d);
    s.e = std::move(e);
    s.leading = monic_rule<F>();
    s.name = "raw";
    return s;
}

// Continuous change of variable x = s u + t: the returned spec describes
// q_n(u) = p_n(s u + t).
template <class F>
FamilySpec<F> affine_change(const FamilySpec<F>& p, const F& s, const F& t) {
    if (p.kind != Kind::Continuous) throw std::invalid_argument("affine change needs a continuous spec");
    if (s.is_zero()) throw std::invalid_argument("affine change with zero scale");
    FamilySpec<F> q = p;
    q.a = p.a;
    q.b = (F(2) * p.a * t + p.b) / s;
    q.c = (p.a * t * t + p.b * t + p.c) / (s * s);
    q.d = p.d;
    q.e = (p.d * t + p.e) / s;
    auto base = p.leading.k;
    if (p.is_monic() && s == F(1)) {
        q.leading = p.leading;
    } else {
        q.leading = {p.leading.name + "*s^n", [base, s](long n) { return base(n) * power(s, n); }};
    }
    q.name = p.name + "@affine";
    return q;
}

}  // namespace opoly
