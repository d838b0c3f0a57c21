#include "opoly/family.hpp"

namespace opoly {

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"jacobi", Kind::Continuous, {"alpha", "beta"}, "(n+alpha+beta+1)_n/(n! 2^n)"},
        {"gegenbauer", Kind::Continuous, {"alpha"}, "(alpha)_n 2^n/n!"},
        {"laguerre", Kind::Continuous, {"alpha"}, "(-1)^n/n!"},
        {"hermite", Kind::Continuous, {}, "2^n"},
        {"bessel", Kind::Continuous, {"alpha"}, "(n+alpha+1)_n/2^n"},
        {"power", Kind::Continuous, {}, "monic"},
        {"hahn", Kind::Discrete, {"alpha", "beta", "N"}, "(n+alpha+beta+1)_n/n!"},
        {"hahn-Q", Kind::Discrete, {"alpha", "beta", "N"}, "(alpha+beta+n+1)_n/((-N)_n (alpha+1)_n)"},
        {"discrete-chebyshev", Kind::Discrete, {"N"}, "(n+1)_n/n!"},
        {"meixner", Kind::Discrete, {"gamma", "mu"}, "(1-1/mu)^n"},
        {"krawtchouk", Kind::Discrete, {"p", "N"}, "1/n!"},
        {"charlier", Kind::Discrete, {"mu"}, "(-1/mu)^n"},
        {"k-family", Kind::Discrete, {"alpha", "beta"}, "alpha^n"},
        {"falling-factorial", Kind::Discrete, {}, "monic"},
    };
    return entries;
}

namespace {

template <class F>
struct Builder {
    const std::map<std::string, F>& params;
    const CatalogEntry& entry;

    F get(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("family '" + entry.name + "' needs parameter '" + key + "'");
        return it->second;
    }
};

template <class F>
FamilySpec<F> build(const CatalogEntry& entry, const std::map<std::string, F>& params) {
    Builder<F> in{params, entry};
    FamilySpec<F> s;
    s.kind = entry.kind;
    s.name = entry.name;
    for (const auto& p : entry.params) s.params.emplace_back(p, in.get(p));
    const std::string& n = entry.name;
    auto rule = [&](std::function<F(long)> k) { s.leading = {entry.leading, std::move(k)}; };

    if (n == "jacobi") {
        F al = in.get("alpha"), be = in.get("beta");
        s.a = F(-1); s.b = F(0); s.c = F(1); s.d = -(al + be + F(2)); s.e = be - al;
        rule([al, be](long k) {
            return pochhammer(F(k) + al + be + F(1), k) / (factorial<F>(k) * power(F(2), k));
        });
    } else if (n == "gegenbauer") {
        F al = in.get("alpha");
        s.a = F(-1); s.b = F(0); s.c = F(1); s.d = -(F(2) * al + F(1)); s.e = F(0);
        rule([al](long k) { return pochhammer(al, k) * power(F(2), k) / factorial<F>(k); });
    } else if (n == "laguerre") {
        F al = in.get("alpha");
        s.a = F(0); s.b = F(1); s.c = F(0); s.d = F(-1); s.e = al + F(1);
        rule([](long k) { return power(F(-1), k) / factorial<F>(k); });
    } else if (n == "hermite") {
        s.a = F(0); s.b = F(0); s.c = F(1); s.d = F(-2); s.e = F(0);
        rule([](long k) { return power(F(2), k); });
    } else if (n == "bessel") {
        F al = in.get("alpha");
        s.a = F(1); s.b = F(0); s.c = F(0); s.d = al + F(2); s.e = F(2);
        rule([al](long k) { return pochhammer(F(k) + al + F(1), k) / power(F(2), k); });
    } else if (n == "power") {
        s.a = F(0); s.b = F(0); s.c = F(0); s.d = F(1); s.e = F(0);
        s.leading = monic_rule<F>();
    } else if (n == "hahn" || n == "discrete-chebyshev") {
        F al = n == "hahn" ? in.get("alpha") : F(0);
        F be = n == "hahn" ? in.get("beta") : F(0);
        F N = in.get("N");
        s.a = F(-1); s.b = N + al; s.c = F(0); s.d = -(al + be + F(2)); s.e = (be + F(1)) * (N - F(1));
        rule([al, be](long k) { return pochhammer(F(k) + al + be + F(1), k) / factorial<F>(k); });
    } else if (n == "hahn-Q") {
        F al = in.get("alpha"), be = in.get("beta"), N = in.get("N");
        s.a = F(-1); s.b = N + F(1) + be; s.c = F(0); s.d = -(al + be + F(2)); s.e = (al + F(1)) * N;
        rule([al, be, N](long k) {
            return pochhammer(al + be + F(k) + F(1), k) / (pochhammer(-N, k) * pochhammer(al + F(1), k));
        });
    } else if (n == "meixner") {
        F ga = in.get("gamma"), mu = in.get("mu");
        s.a = F(0); s.b = F(1); s.c = F(0); s.d = mu - F(1); s.e = ga * mu;
        rule([mu](long k) { return power(F(1) - F(1) / mu, k); });
    } else if (n == "krawtchouk") {
        F p = in.get("p"), N = in.get("N");
        s.a = F(0); s.b = F(1); s.c = F(0); s.d = F(1) / (p - F(1)); s.e = N * p / (F(1) - p);
        rule([](long k) { return F(1) / factorial<F>(k); });
    } else if (n == "charlier") {
        F mu = in.get("mu");
        s.a = F(0); s.b = F(1); s.c = F(0); s.d = F(-1); s.e = mu;
        rule([mu](long k) { return power(F(-1) / mu, k); });
    } else if (n == "k-family") {
        F al = in.get("alpha"), be = in.get("beta");
        s.a = F(0); s.b = F(0); s.c = F(1); s.d = al; s.e = be;
        rule([al](long k) { return power(al, k); });
    } else if (n == "falling-factorial") {
        s.a = F(0); s.b = F(1); s.c = F(0); s.d = F(-1); s.e = F(0);
        s.leading = monic_rule<F>();
    }
    return s;
}

}  // namespace

template <class F>
FamilySpec<F> catalog(const std::string& name, const std::map<std::string, F>& params) {
    bool monic = false;
    std::string base = name;
    const std::string suffix = "-monic";
    if (base.size() > suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
        monic = true;
        base.resize(base.size() - suffix.size());
    }
    const CatalogEntry* entry = nullptr;
    for (const auto& e : catalog_entries())
        if (e.name == base) entry = &e;
    if (!entry) throw std::invalid_argument("unknown family '" + name + "'");
    for (const auto& [k, v] : params) {
        bool known = false;
        for (const auto& p : entry->params) known = known || p == k;
        if (!known) throw std::invalid_argument("family '" + base + "' has no parameter '" + k + "'");
    }
    FamilySpec<F> s;
    try {
        s = build<F>(*entry, params);
        if (s.d.is_zero()) throw std::invalid_argument("parameters make tau constant (d = 0)");
        for (long k = 0; k <= 1; ++k)
            if (s.k(k).is_zero()) throw std::invalid_argument("parameters make k_n vanish");
    } catch (const std::domain_error& e) {
        throw std::invalid_argument("parameters of '" + name + "' are degenerate: " + e.what());
    }
    if (monic) {
        s.leading = monic_rule<F>();
        s.name = base + "-monic";
    }
    return s;
}

template FamilySpec<Rational> catalog<Rational>(const std::string&, const std::map<std::string, Rational>&);
template FamilySpec<RationalFunction> catalog<RationalFunction>(const std::string&,
                                                                 const std::map<std::string, RationalFunction>&);

}  // namespace opoly
