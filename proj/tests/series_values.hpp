#pragma once

// Printed hypergeometric representations and inverse expansions of the
// catalog families, transcribed by hand and evaluated with a test-side
// terminating-series summation that shares no code with the library.

#include "opoly/polynomial.hpp"
#include "samples.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace opoly::test {

using R = Rational;
using Poly = Polynomial<R>;

inline R poch(R a, long k) {
    R r(1);
    for (long i = 0; i < k; ++i) r *= a + R(i);
    return r;
}
inline R fact(long k) { return poch(R(1), k); }
inline R pw(R a, long k) {
    R r(1);
    for (long i = 0; i < k; ++i) r *= a;
    return r;
}
inline R binom(R top, long k) { return poch(top - R(k - 1), k) / fact(k); }

// Terms (up)_k / ((lo)_k k!) of a terminating pFq, k = 0..K where -K is the
// first nonpositive integer among `up`.
inline std::vector<R> hyp_terms(const std::vector<R>& up, const std::vector<R>& lo) {
    long K = -1;
    for (const auto& u : up)
        if (u.is_integer() && u.sign() <= 0 && (K < 0 || -u.to_long() < K)) K = -u.to_long();
    std::vector<R> out;
    for (long k = 0; k <= K; ++k) {
        R num(1), den(fact(k));
        for (const auto& u : up) num *= poch(u, k);
        for (const auto& l : lo) den *= poch(l, k);
        out.push_back(num / den);
    }
    return out;
}

inline Poly ppow(const Poly& p, long k) {
    Poly r({R(1)});
    for (long i = 0; i < k; ++i) r = r * p;
    return r;
}

// sum_k t_k (c0 + c1 x)^k
inline Poly hyp_affine(const std::vector<R>& up, const std::vector<R>& lo, R c0, R c1) {
    Poly s;
    auto t = hyp_terms(up, lo);
    for (size_t k = 0; k < t.size(); ++k) s += ppow(Poly({c0, c1}), k) * t[k];
    return s;
}

// (u0 + u1 x)^n sum_k t_k z^k (u0 + u1 x)^(-q k)
inline Poly hyp_recip(const std::vector<R>& up, const std::vector<R>& lo, long n, R z, R u0, R u1, long q = 1) {
    Poly s;
    auto t = hyp_terms(up, lo);
    for (size_t k = 0; k < t.size(); ++k) s += ppow(Poly({u0, u1}), n - q * long(k)) * (t[k] * pw(z, k));
    return s;
}

// sum_k t_k (-x)_k z^k, the -x parameter left implicit; returned in the monomial basis
inline Poly hyp_discrete(const std::vector<R>& up, const std::vector<R>& lo, R z) {
    Poly s(Basis::FallingFactorial);
    auto t = hyp_terms(up, lo);
    for (size_t k = 0; k < t.size(); ++k) {
        R sign = k % 2 ? R(-1) : R(1);
        s += Poly::unit(long(k), Basis::FallingFactorial) * (t[k] * pw(z, k) * sign);
    }
    return basis_convert(s, Basis::Monomial);
}

struct PrintedRep {
    std::string name;
    Sample sample;
    std::function<Poly(long)> value;
};

inline std::vector<Sample> samples_of(const std::string& family) {
    std::vector<Sample> out;
    for (const auto& s : samples())
        if (s.family == family) out.push_back(s);
    return out;
}

inline std::vector<PrintedRep> printed_representations() {
    std::vector<PrintedRep> out;
    auto add = [&](std::string name, std::string family, bool monic, auto fn) {
        for (auto smp : samples_of(family)) {
            auto params = smp.params;
            Sample built{monic ? family + "-monic" : family, params};
            out.push_back({name, built, [fn, params](long n) { return fn(n, params); }});
        }
    };
    using M = std::map<std::string, R>;
    const R one(1), two(2), half(1, 2);

    // Jacobi at both endpoints, forward and reversed
    add("jacobi (1-x)/2", "jacobi", false, [=](long n, M p) {
        R a = p["alpha"], b = p["beta"], N(n);
        return hyp_affine({-N, N + a + b + one}, {a + one}, half, -half) * binom(N + a, n);
    });
    add("jacobi 2/(1-x)", "jacobi", false, [=](long n, M p) {
        R a = p["alpha"], b = p["beta"], N(n);
        // ((x-1)/2)^n F(2/(1-x)) = ((x-1)/2)^n sum t_k (-1)^k ((x-1)/2)^-k
        return hyp_recip({-N, -N - a}, {-two * N - a - b}, n, R(-1), -half, half) * binom(two * N + a + b, n);
    });
    add("jacobi (1+x)/2", "jacobi", false, [=](long n, M p) {
        R a = p["alpha"], b = p["beta"], N(n);
        return hyp_affine({-N, N + a + b + one}, {b + one}, half, half) * (pw(R(-1), n) * binom(N + b, n));
    });
    add("jacobi 2/(1+x)", "jacobi", false, [=](long n, M p) {
        R a = p["alpha"], b = p["beta"], N(n);
        return hyp_recip({-N, -N - b}, {-two * N - a - b}, n, one, half, half) * binom(two * N + a + b, n);
    });
    add("gegenbauer monic", "gegenbauer", true, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_recip({-N / two, -N / two + half}, {one - N - a}, n, one, R(0), one, 2);
    });
    add("gegenbauer", "gegenbauer", false, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_recip({-N / two, -N / two + half}, {one - N - a}, n, one, R(0), one, 2) *
               (poch(a, n) * pw(two, n) / fact(n));
    });
    add("laguerre monic 1F1", "laguerre", true, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_affine({-N}, {one + a}, R(0), one) * (poch(one + a, n) * pw(R(-1), n));
    });
    add("laguerre monic 2F0", "laguerre", true, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_recip({-N, -N - a}, {}, n, R(-1), R(0), one);
    });
    add("laguerre 1F1", "laguerre", false, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_affine({-N}, {one + a}, R(0), one) * binom(N + a, n);
    });
    add("laguerre 2F0", "laguerre", false, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_recip({-N, -N - a}, {}, n, R(-1), R(0), one) * (pw(R(-1), n) / fact(n));
    });
    add("hermite monic", "hermite", true, [=](long n, M) {
        R N(n);
        return hyp_recip({-N / two, -N / two + half}, {}, n, R(-1), R(0), one, 2);
    });
    add("hermite", "hermite", false, [=](long n, M) {
        R N(n);
        return hyp_recip({-N / two, -N / two + half}, {}, n, R(-1), R(0), one, 2) * pw(two, n);
    });
    add("bessel monic 2F0", "bessel", true, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_affine({-N, N + a + one}, {}, R(0), -half) * (pw(two, n) / poch(N + a + one, n));
    });
    add("bessel monic 1F1", "bessel", true, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_recip({-N}, {-two * N - a}, n, two, R(0), one);
    });
    add("bessel 2F0", "bessel", false, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_affine({-N, N + a + one}, {}, R(0), -half);
    });
    add("bessel 1F1", "bessel", false, [=](long n, M p) {
        R a = p["alpha"], N(n);
        return hyp_recip({-N}, {-two * N - a}, n, two, R(0), one) * (poch(N + a + one, n) / pw(two, n));
    });

    // discrete families, -x among the upper parameters
    add("hahn", "hahn", false, [=](long n, M p) {
        R a = p["alpha"], b = p["beta"], NN = p["N"], N(n);
        return hyp_discrete({-N, N + one + a + b}, {b + one, one - NN}, one) *
               (pw(R(-1), n) / fact(n) * poch(b + one, n) * poch(NN - N, n));
    });
    add("hahn monic", "hahn", true, [=](long n, M p) {
        R a = p["alpha"], b = p["beta"], NN = p["N"], N(n);
        return hyp_discrete({-N, N + one + a + b}, {b + one, one - NN}, one) *
               (poch(one + b, n) * poch(one - NN, n) / poch(one + N + a + b, n));
    });
    add("discrete chebyshev", "discrete-chebyshev", false, [=](long n, M p) {
        R NN = p["N"], N(n);
        return hyp_discrete({-N, N + one}, {one, one - NN}, one) * (pw(R(-1), n) * poch(NN - N, n));
    });
    add("discrete chebyshev monic", "discrete-chebyshev", true, [=](long n, M p) {
        R NN = p["N"], N(n);
        return hyp_discrete({-N, N + one}, {one, one - NN}, one) *
               (fact(n) * poch(one - NN, n) / (poch(half, n) * pw(R(4), n)));
    });
    add("hahn Q", "hahn-Q", false, [=](long n, M p) {
        R a = p["alpha"], b = p["beta"], NN = p["N"], N(n);
        return hyp_discrete({-N, N + one + a + b}, {a + one, -NN}, one);
    });
    add("hahn Q monic", "hahn-Q", true, [=](long n, M p) {
        // monic hahn with alpha and beta swapped and N + 1
        R a = p["beta"], b = p["alpha"], NN = p["N"] + one, N(n);
        return hyp_discrete({-N, N + one + a + b}, {b + one, one - NN}, one) *
               (poch(one + b, n) * poch(one - NN, n) / poch(one + N + a + b, n));
    });
    add("meixner", "meixner", false, [=](long n, M p) {
        R g = p["gamma"], mu = p["mu"], N(n);
        return hyp_discrete({-N}, {g}, one - one / mu) * poch(g, n);
    });
    add("meixner monic", "meixner", true, [=](long n, M p) {
        R g = p["gamma"], mu = p["mu"], N(n);
        return hyp_discrete({-N}, {g}, one - one / mu) * (poch(g, n) * pw(mu / (mu - one), n));
    });
    add("krawtchouk", "krawtchouk", false, [=](long n, M p) {
        R pp = p["p"], NN = p["N"], N(n);
        return hyp_discrete({-N}, {-NN}, one / pp) * (pw(R(-1), n) * binom(NN, n) * pw(pp, n));
    });
    add("krawtchouk monic", "krawtchouk", true, [=](long n, M p) {
        R pp = p["p"], NN = p["N"], N(n);
        return hyp_discrete({-N}, {-NN}, one / pp) * (poch(-NN, n) * pw(pp, n));
    });
    add("charlier", "charlier", false, [=](long n, M p) {
        R mu = p["mu"], N(n);
        return hyp_discrete({-N}, {}, -one / mu);
    });
    add("charlier monic", "charlier", true, [=](long n, M p) {
        R mu = p["mu"], N(n);
        return hyp_discrete({-N}, {}, -one / mu) * pw(-mu, n);
    });
    return out;
}

inline std::set<std::string> printed_representation_names() {
    std::set<std::string> s;
    for (const auto& r : printed_representations()) s.insert(r.name);
    return s;
}

struct PrintedInverse {
    std::string name;
    Sample sample;
    std::function<std::vector<R>(long)> coeffs;
    std::function<Poly(long)> target;
    bool power_target = true;  // x^n or the n-th falling factorial
};

inline std::vector<PrintedInverse> printed_inverses() {
    std::vector<PrintedInverse> out;
    using M = std::map<std::string, R>;
    const R one(1), two(2), half(1, 2);
    auto xn = [](long n) { return Poly::unit(n); };
    auto xfall = [](long n) { return basis_convert(Poly::unit(n, Basis::FallingFactorial), Basis::Monomial); };
    // Builds C_m from a per-m function.
    auto add = [&](std::string name, std::string family, bool monic, bool discrete, auto cm) {
        for (auto smp : samples_of(family)) {
            auto params = smp.params;
            Sample built{monic ? family + "-monic" : family, params};
            out.push_back({name, built,
                           [cm, params](long n) {
                               std::vector<R> c(n + 1, R(0));
                               for (long m = 0; m <= n; ++m) c[m] = cm(n, m, params);
                               return c;
                           },
                           discrete ? std::function<Poly(long)>(xfall) : std::function<Poly(long)>(xn), true});
        }
    };
    // Symmetric sums over k with Q_{n-2k}.
    auto add_sym = [&](std::string name, std::string family, bool monic, auto ck) {
        for (auto smp : samples_of(family)) {
            auto params = smp.params;
            Sample built{monic ? family + "-monic" : family, params};
            out.push_back({name, built,
                           [ck, params](long n) {
                               std::vector<R> c(n + 1, R(0));
                               for (long k = 0; 2 * k <= n; ++k) c[n - 2 * k] = ck(n, k, params);
                               return c;
                           },
                           std::function<Poly(long)>(xn), true});
        }
    };

    for (auto smp : samples_of("jacobi")) {
        auto p = smp.params;
        R a = p["alpha"], b = p["beta"];
        auto coeff = [a, b, one, two](long n, long m, R lead, R sign) {
            R M(m), N(n);
            return pw(two, n) * poch(lead + M + one, n - m) * (a + b + two * M + one) / poch(a + b + M + one, n + 1) *
                   poch(-N, m) * pw(sign, m);
        };
        auto one_minus = [](long n) { return ppow(Poly({R(1), R(-1)}), n); };
        auto one_plus = [](long n) { return ppow(Poly({R(1), R(1)}), n); };
        out.push_back({"jacobi (1-x)^n", smp,
                       [coeff, a](long n) {
                           std::vector<R> c;
                           for (long m = 0; m <= n; ++m) c.push_back(coeff(n, m, a, R(1)));
                           return c;
                       },
                       one_minus, false});
        out.push_back({"jacobi (1+x)^n", smp,
                       [coeff, b](long n) {
                           std::vector<R> c;
                           for (long m = 0; m <= n; ++m) c.push_back(coeff(n, m, b, R(-1)));
                           return c;
                       },
                       one_plus, false});
    }
    add_sym("gegenbauer monic", "gegenbauer", true, [=](long n, long k, M p) {
        R a = p["alpha"], N(n);
        return poch(-N / two, k) * poch(-N / two + half, k) * poch(-N - a, k) /
               (poch(-N / two - a / two, k) * poch(-N / two - a / two + half, k) * fact(k)) * pw(R(-1, 4), k);
    });
    add_sym("gegenbauer", "gegenbauer", false, [=](long n, long k, M p) {
        R a = p["alpha"], N(n);
        return fact(n) / (poch(a, n) * pw(two, n)) * poch(-N / two - a / two + one, k) * poch(-N - a, k) /
               (poch(-N / two - a / two, k) * fact(k)) * pw(R(-1), k);
    });
    add_sym("gegenbauer second form", "gegenbauer", false, [=](long n, long k, M p) {
        R a = p["alpha"], N(n), K(k);
        return fact(n) / pw(two, n) * (N + a - two * K) / (fact(k) * poch(a, n + 1 - k));
    });
    add("laguerre monic", "laguerre", true, false, [=](long n, long m, M p) {
        R a = p["alpha"], N(n);
        return poch(one + a, n) * poch(-N, m) / (poch(one + a, m) * fact(m)) * pw(R(-1), m);
    });
    add("laguerre", "laguerre", false, false, [=](long n, long m, M p) {
        R a = p["alpha"], N(n);
        return poch(one + a, n) * poch(-N, m) / poch(one + a, m);
    });
    add("laguerre second form", "laguerre", false, false, [=](long n, long m, M p) {
        R a = p["alpha"], N(n);
        return fact(n) * binom(N + a, n - m) * pw(R(-1), m);
    });
    add_sym("hermite monic", "hermite", true, [=](long n, long k, M) {
        R N(n);
        return poch(-N / two, k) * poch(-N / two + half, k) / fact(k);
    });
    add_sym("hermite", "hermite", false, [=](long n, long k, M) {
        R N(n);
        return poch(-N / two, k) * poch(-N / two + half, k) / (fact(k) * pw(two, n - 2 * k));
    });
    add_sym("hermite second form", "hermite", false, [=](long n, long k, M) {
        return fact(n) / pw(two, n) / (fact(k) * fact(n - 2 * k));
    });
    add("bessel monic", "bessel", true, false, [=](long n, long m, M p) {
        R a = p["alpha"], N(n);
        return pw(R(-2), n) / poch(a + two, n) * poch(-N, m) * poch(a / two + one, m) * poch(a / two + R(3, 2), m) /
               (poch(N + two + a, m) * fact(m)) * pw(two, m);
    });
    add("bessel", "bessel", false, false, [=](long n, long m, M p) {
        R a = p["alpha"], N(n);
        return pw(R(-2), n) / poch(a + two, n) * poch(-N, m) * poch(a + one, m) * poch(a / two + R(3, 2), m) /
               (poch(N + two + a, m) * poch(a / two + half, m) * fact(m));
    });
    add("bessel second form", "bessel", false, false, [=](long n, long m, M p) {
        R a = p["alpha"], N(n), Mm(m);
        return pw(R(-2), n) * (two * Mm + a + one) * poch(-N, m) / (fact(m) * poch(a + Mm + one, n + 1));
    });

    add("hahn", "hahn", false, true, [=](long n, long m, M p) {
        R a = p["alpha"], b = p["beta"], NN = p["N"], N(n), Mm(m);
        return poch(b + one, n) * poch(one - NN, n) * pw(R(-1), n) * (one + a + b + two * Mm) * poch(-N, m) *
               poch(one + a + b, m) /
               (poch(a + b + two, n) * (one + a + b) * poch(N + two + a + b, m) * poch(b + one, m) *
                poch(one - NN, m));
    });
    add("hahn monic", "hahn", true, true, [=](long n, long m, M p) {
        R a = p["alpha"], b = p["beta"], NN = p["N"], N(n);
        return poch(b + one, n) * poch(one - NN, n) * pw(R(-1), n) / poch(a + b + two, n) * poch(-N, m) *
               poch(a / two + b / two + one, m) * poch(a / two + b / two + R(3, 2), m) * pw(R(4), m) /
               (poch(N + two + a + b, m) * poch(b + one, m) * poch(one - NN, m) * fact(m));
    });
    add("hahn Q", "hahn-Q", false, true, [=](long n, long m, M p) {
        R a = p["alpha"], b = p["beta"], NN = p["N"], N(n), Mm(m);
        return poch(one + a, n) * poch(-NN, n) * pw(R(-1), n) / poch(a + b + two, n) * (a + b + one + two * Mm) /
               (a + b + one) * poch(-N, m) * poch(one + a + b, m) / (poch(N + two + a + b, m) * fact(m));
    });
    add("discrete chebyshev", "discrete-chebyshev", false, true, [=](long n, long m, M p) {
        R NN = p["N"], N(n), Mm(m);
        return poch(one - NN, n) * pw(R(-1), n) / (N + one) * poch(-N, m) * (one + two * Mm) /
               (poch(N + two, m) * poch(one - NN, m));
    });
    add("discrete chebyshev monic", "discrete-chebyshev", true, true, [=](long n, long m, M p) {
        R NN = p["N"], N(n);
        return poch(one - NN, n) * pw(R(-1), n) / (N + one) * poch(-N, m) * poch(R(3, 2), m) * pw(R(4), m) /
               (poch(N + two, m) * poch(one - NN, m) * fact(m));
    });
    add("meixner", "meixner", false, true, [=](long n, long m, M p) {
        R g = p["gamma"], mu = p["mu"], N(n);
        return pw(R(-1), n) * poch(g, n) * pw(mu / (mu - one), n) * poch(-N, m) / (poch(g, m) * fact(m));
    });
    add("meixner monic", "meixner", true, true, [=](long n, long m, M p) {
        R g = p["gamma"], mu = p["mu"], N(n);
        return pw(R(-1), n) * poch(g, n) * pw(mu / (mu - one), n - m) * poch(-N, m) / (poch(g, m) * fact(m));
    });
    add("krawtchouk", "krawtchouk", false, true, [=](long n, long m, M p) {
        R pp = p["p"], NN = p["N"], N(n);
        return pw(R(-1), n) * poch(-NN, n) * pw(pp, n - m) * poch(-N, m) / poch(-NN, m);
    });
    add("krawtchouk monic", "krawtchouk", true, true, [=](long n, long m, M p) {
        R pp = p["p"], NN = p["N"], N(n);
        return pw(R(-1), n) * poch(-NN, n) * pw(pp, n - m) * poch(-N, m) / (poch(-NN, m) * fact(m));
    });
    add("charlier", "charlier", false, true, [=](long n, long m, M p) {
        R mu = p["mu"], N(n);
        return pw(mu, n) * poch(-N, m) / fact(m);
    });
    add("charlier monic", "charlier", true, true, [=](long n, long m, M p) {
        R mu = p["mu"], N(n);
        return pw(R(-1), n) * pw(-mu, n - m) * poch(-N, m) / fact(m);
    });
    return out;
}

inline std::set<std::string> printed_inverse_names() {
    std::set<std::string> s;
    for (const auto& r : printed_inverses()) s.insert(r.name);
    return s;
}

}  // namespace opoly::test
