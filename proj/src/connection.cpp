#include "opoly/connection.hpp"

#include <algorithm>
#include <stdexcept>

namespace opoly {

namespace {

using R = Rational;
using Par = std::map<std::string, R>;

R get(const Par& p, const char* k) {
    auto it = p.find(k);
    if (it == p.end()) throw std::invalid_argument(std::string("missing parameter ") + k);
    return it->second;
}

R half(1, 2);

R sgn(long k) { return k % 2 ? R(-1) : R(1); }

// First-order value along the parameter direction: a factor is v + s t with
// t -> 0. Zero factors contribute their slope s, so matched zeros cancel to the
// true limit rather than to 1.
struct D {
    R v{0}, s{0};
    D() = default;
    D(R v_, R s_ = R(0)) : v(std::move(v_)), s(std::move(s_)) {}
    D(long k) : v(k) {}
    friend D operator+(const D& x, const D& y) { return {x.v + y.v, x.s + y.s}; }
    friend D operator-(const D& x, const D& y) { return {x.v - y.v, x.s - y.s}; }
    friend D operator-(const D& x) { return {-x.v, -x.s}; }
    friend D operator*(const D& x, const D& y) { return {x.v * y.v, x.v * y.s + x.s * y.v}; }
    friend D operator/(const D& x, const D& y) {
        if (y.v.is_zero()) throw std::domain_error("division by a vanishing parameter expression");
        return {x.v / y.v, (x.s * y.v - x.v * y.s) / (y.v * y.v)};
    }
};

// Direction of the limit. Powers of ten keep every factor that occurs in the
// formulas off a zero slope.
D dget(const Par& p, const char* k) {
    static const std::map<std::string, long> slope{{"alpha", 1},     {"beta", 10},     {"gamma", 100},
                                                   {"delta", 1000},  {"N", 10000},     {"M", 100000},
                                                   {"mu", 1000000},  {"nu", 10000000}, {"p", 100000000},
                                                   {"q", 1000000000}};
    return {get(p, k), R(slope.at(k))};
}

class L {
public:
    L& mul(const D& x) { return factor(x, true); }
    L& div(const D& x) { return factor(x, false); }
    L& mul_poch(const D& a, long k) {
        for (long i = 0; i < k; ++i) mul(a + D(i));
        return *this;
    }
    L& div_poch(const D& a, long k) {
        for (long i = 0; i < k; ++i) div(a + D(i));
        return *this;
    }
    L& mul_pow(const D& a, long k) {
        for (long i = 0; i < (k < 0 ? -k : k); ++i) factor(a, k > 0);
        return *this;
    }
    L& div_factorial(long k) { return div_poch(D(1), k); }
    // Gamma(bottom + shift) / Gamma(bottom)
    L& mul_gamma_ratio(const D& bottom, long shift) {
        return shift >= 0 ? mul_poch(bottom, shift) : div_poch(bottom + D(shift), -shift);
    }
    R value() const {
        if (zeros_ > 0) return R(0);
        if (zeros_ < 0) throw std::domain_error("unmatched zero in a denominator");
        return num_ / den_;
    }

private:
    L& factor(const D& x, bool up) {
        const R* f = &x.v;
        if (x.v.is_zero()) {
            if (x.s.is_zero()) throw std::domain_error("zero factor of higher order");
            zeros_ += up ? 1 : -1;
            f = &x.s;
        }
        (up ? num_ : den_) *= *f;
        return *this;
    }
    R num_{1}, den_{1};
    long zeros_ = 0;
};

std::function<Par(const Par&)> pick(std::vector<std::pair<std::string, std::string>> names) {
    return [names](const Par& p) {
        Par out;
        for (const auto& [dst, src] : names) out[dst] = get(p, src.c_str());
        return out;
    };
}

std::vector<ClosedConnection> build_connections() {
    std::vector<ClosedConnection> v;
    auto add = [&](std::string name, std::string from, std::string to, std::vector<std::string> params, int step,
                   std::string desc, std::function<Par(const Par&)> fp, std::function<Par(const Par&)> tp,
                   std::function<R(long, long, const Par&)> term) {
        v.push_back({std::move(name), std::move(from), std::move(to), std::move(params), step, std::move(desc),
                     std::move(fp), std::move(tp), std::move(term)});
    };

    // ---- continuous
    add("jacobi-alpha", "jacobi", "jacobi", {"alpha", "beta", "gamma"}, 1, "P^(alpha,beta)_n in P^(gamma,beta)_m",
        pick({{"alpha", "alpha"}, {"beta", "beta"}}), pick({{"alpha", "gamma"}, {"beta", "beta"}}),
        [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), ga = dget(p, "gamma"), N(n), M(m);
            L t;
            t.mul(R(2) * M + ga + be + R(1))
                .mul_gamma_ratio(M + be + R(1), n - m)
                .mul_gamma_ratio(N + al + be + R(1), m)
                .mul_gamma_ratio(N + M + ga + be + R(2), -(n + 1))
                .mul_poch(al - ga, n - m)
                .div_factorial(n - m);
            return t.value();
        });
    add("jacobi-beta", "jacobi", "jacobi", {"alpha", "beta", "delta"}, 1, "P^(alpha,beta)_n in P^(alpha,delta)_m",
        pick({{"alpha", "alpha"}, {"beta", "beta"}}), pick({{"alpha", "alpha"}, {"beta", "delta"}}),
        [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), de = dget(p, "delta"), N(n), M(m);
            L t;
            t.mul(sgn(n - m))
                .mul(R(2) * M + al + de + R(1))
                .mul_gamma_ratio(M + al + R(1), n - m)
                .mul_gamma_ratio(N + al + be + R(1), m)
                .mul_gamma_ratio(N + M + al + de + R(2), -(n + 1))
                .mul_poch(be - de, n - m)
                .div_factorial(n - m);
            return t.value();
        });
    add("gegenbauer", "gegenbauer", "gegenbauer", {"alpha", "beta"}, 2, "C^alpha_n in C^beta_{n-2k}",
        pick({{"alpha", "alpha"}}), pick({{"alpha", "beta"}}), [](long n, long k, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), N(n), K(k);
            L t;
            t.mul(N - R(2) * K + be).mul_poch(al - be, k).mul_poch(al, n - k).div_factorial(k).div_poch(be, n - k + 1);
            return t.value();
        });
    add("laguerre", "laguerre", "laguerre", {"alpha", "beta"}, 1, "L^(alpha)_n in L^(beta)_m",
        pick({{"alpha", "alpha"}}), pick({{"alpha", "beta"}}), [](long n, long m, const Par& p) {
            L t;
            t.mul_poch(dget(p, "alpha") - dget(p, "beta"), n - m).div_factorial(n - m);
            return t.value();
        });
    add("bessel", "bessel", "bessel", {"alpha", "beta"}, 1, "B^(alpha)_n in B^(beta)_m",
        pick({{"alpha", "alpha"}}), pick({{"alpha", "beta"}}), [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), N(n);
            L t;
            t.mul(sgn(n + m))
                .mul_poch(al - be, n)
                .div_poch(be + R(2), n)
                .mul_poch(-N, m)
                .mul_poch(be + R(1), m)
                .mul_poch(be / R(2) + R(3, 2), m)
                .mul_poch(N + al + R(1), m)
                .div_poch(N + R(2) + be, m)
                .div_poch(be / R(2) + half, m)
                .div_poch(be - al + R(1) - N, m)
                .div_factorial(m);
            return t.value();
        });
    add("bessel-gamma", "bessel", "bessel", {"alpha", "beta"}, 1, "B^(alpha)_n in B^(beta)_m, Gamma-ratio form",
        pick({{"alpha", "alpha"}}), pick({{"alpha", "beta"}}), [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), N(n), M(m);
            L t;
            t.mul(sgn(m))
                .mul(R(2) * M + be + R(1))
                .mul_poch(-N, m)
                .mul_gamma_ratio(N + M + be + R(2), -(n + 1))
                .mul_poch(N + al + R(1), m)
                .mul_gamma_ratio(M - N + be - al + R(1), n - m)
                .div_factorial(m);
            return t.value();
        });

    // ---- Hahn
    add("hahn-beta", "hahn", "hahn", {"alpha", "beta", "delta", "N"}, 1, "h^(alpha,beta)_n in h^(alpha,delta)_m",
        pick({{"alpha", "alpha"}, {"beta", "beta"}, {"N", "N"}}), pick({{"alpha", "alpha"}, {"beta", "delta"}, {"N", "N"}}),
        [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), de = dget(p, "delta"), NN = dget(p, "N"), N(n), M(m);
            L t;
            t.mul_poch(be - de, n)
                .mul_poch(R(1) - NN, n)
                .mul_poch(al + R(1), n)
                .div_poch(R(2) + al + de, n)
                .div_factorial(n)
                .mul(al + de + R(1) + R(2) * M)
                .div(al + de + R(1))
                .mul_poch(-N, m)
                .mul_poch(R(1) + al + de, m)
                .mul_poch(N + R(1) + al + be, m)
                .div_poch(R(1) - NN, m)
                .div_poch(al + R(1), m)
                .div_poch(al + R(2) + N + de, m)
                .div_poch(-N - be + de + R(1), m);
            return t.value();
        });
    add("hahn-beta-monic", "hahn-monic", "hahn-monic", {"alpha", "beta", "delta", "N"}, 1,
        "monic h^(alpha,beta)_n in monic h^(alpha,delta)_m", pick({{"alpha", "alpha"}, {"beta", "beta"}, {"N", "N"}}),
        pick({{"alpha", "alpha"}, {"beta", "delta"}, {"N", "N"}}), [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), de = dget(p, "delta"), NN = dget(p, "N"), N(n);
            L t;
            t.mul_poch(al + R(1), n)
                .mul_poch(R(1) - NN, n)
                .mul_poch(R(1) + al + be, n)
                .mul_poch(be - de, n)
                .div_poch(R(2) + al + de, n)
                .div_poch(al / R(2) + be / R(2) + half, n)
                .div_poch(al / R(2) + be / R(2) + R(1), n)
                .mul_pow(R(4), -n)
                .mul_poch(-N, m)
                .mul_poch(N + R(1) + al + be, m)
                .mul_poch(al / R(2) + de / R(2) + R(1), m)
                .mul_poch(al / R(2) + de / R(2) + R(3, 2), m)
                .mul_pow(R(4), m)
                .div_poch(R(1) - NN, m)
                .div_poch(al + R(1), m)
                .div_poch(al + R(2) + N + de, m)
                .div_poch(-N - be + de + R(1), m)
                .div_factorial(m);
            return t.value();
        });
    add("hahn-alpha", "hahn", "hahn", {"alpha", "beta", "gamma", "N"}, 1, "h^(alpha,beta)_n in h^(gamma,beta)_m",
        pick({{"alpha", "alpha"}, {"beta", "beta"}, {"N", "N"}}), pick({{"alpha", "gamma"}, {"beta", "beta"}, {"N", "N"}}),
        [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), ga = dget(p, "gamma"), NN = dget(p, "N"), N(n), M(m);
            L t;
            t.mul_poch(be + R(1), n)
                .mul_poch(R(1) - NN, n)
                .mul_poch(al - ga, n)
                .mul(sgn(n))
                .div_poch(R(2) + be + ga, n)
                .div_factorial(n)
                .mul(be + ga + R(1) + R(2) * M)
                .div(be + ga + R(1))
                .mul_poch(-N, m)
                .mul_poch(R(1) + be + ga, m)
                .mul_poch(N + R(1) + al + be, m)
                .mul(sgn(m))
                .div_poch(R(1) - NN, m)
                .div_poch(be + R(1), m)
                .div_poch(be + ga + N + R(2), m)
                .div_poch(ga - al - N + R(1), m);
            return t.value();
        });
    add("hahn-alpha-monic", "hahn-monic", "hahn-monic", {"alpha", "beta", "gamma", "N"}, 1,
        "monic h^(alpha,beta)_n in monic h^(gamma,beta)_m", pick({{"alpha", "alpha"}, {"beta", "beta"}, {"N", "N"}}),
        pick({{"alpha", "gamma"}, {"beta", "beta"}, {"N", "N"}}), [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), ga = dget(p, "gamma"), NN = dget(p, "N"), N(n);
            L t;
            t.mul_poch(be + R(1), n)
                .mul_poch(R(1) - NN, n)
                .mul_poch(R(1) + al + be, n)
                .mul_poch(al - ga, n)
                .mul(sgn(n))
                .div_poch(R(2) + be + ga, n)
                .div_poch(al / R(2) + be / R(2) + half, n)
                .div_poch(al / R(2) + be / R(2) + R(1), n)
                .mul_pow(R(4), -n)
                .mul_poch(-N, m)
                .mul_poch(N + R(1) + al + be, m)
                .mul_poch(be / R(2) + ga / R(2) + R(1), m)
                .mul_poch(be / R(2) + ga / R(2) + R(3, 2), m)
                .mul_pow(R(-4), m)
                .div_poch(be + ga + N + R(2), m)
                .div_poch(R(1) - NN, m)
                .div_poch(be + R(1), m)
                .div_poch(ga - al - N + R(1), m)
                .div_factorial(m);
            return t.value();
        });
    add("hahn-symmetric-monic", "hahn-monic", "hahn-monic", {"alpha", "gamma", "N"}, 2,
        "monic h^(alpha,alpha)_n in monic h^(gamma,gamma)_{n-2k}", pick({{"alpha", "alpha"}, {"beta", "alpha"}, {"N", "N"}}),
        pick({{"alpha", "gamma"}, {"beta", "gamma"}, {"N", "N"}}), [](long n, long k, const Par& p) {
            D al = dget(p, "alpha"), ga = dget(p, "gamma"), NN = dget(p, "N"), N(n);
            L t;
            t.mul_poch(-N / R(2), k)
                .mul_poch(-(N - R(1)) / R(2), k)
                .mul_poch(al - ga, k)
                .mul_poch((NN - N) / R(2), k)
                .mul_poch((NN - N + R(1)) / R(2), k)
                .mul_poch(-N - ga - half, k)
                .div_poch(R(1, 4) - ga / R(2) - N / R(2), k)
                .div_poch(-N + half - al, k)
                .div_poch(-N / R(2) - R(1, 4) - ga / R(2), k)
                .div_factorial(k)
                .mul_pow(R(4), -k);
            return t.value();
        });
    add("hahn-symmetric", "hahn", "hahn", {"alpha", "gamma", "N"}, 2, "h^(alpha,alpha)_n in h^(gamma,gamma)_{n-2k}",
        pick({{"alpha", "alpha"}, {"beta", "alpha"}, {"N", "N"}}), pick({{"alpha", "gamma"}, {"beta", "gamma"}, {"N", "N"}}),
        [](long n, long k, const Par& p) {
            D al = dget(p, "alpha"), ga = dget(p, "gamma"), NN = dget(p, "N"), N(n);
            L t;
            t.mul_poch(al + R(1), n)
                .mul_poch(al + half, n)
                .mul_poch(R(2) * ga + R(1), n)
                .div_poch(ga + R(1), n)
                .div_poch(ga + half, n)
                .div_poch(R(2) * al + R(1), n)
                .mul_poch((NN - N) / R(2), k)
                .mul_poch((NN - N + R(1)) / R(2), k)
                .mul_poch(al - ga, k)
                .mul_poch((R(3) - R(2) * ga - R(2) * N) / R(4), k)
                .mul_poch((-R(2) * ga - R(2) * N - R(1)) / R(2), k)
                .mul_poch((-ga - N) / R(2), k)
                .mul_poch((-ga - N + R(1)) / R(2), k)
                .mul_pow(R(4), k)
                .div_poch(-ga - N / R(2), k)
                .div_poch(-ga / R(2) - N / R(2) - R(1, 4), k)
                .div_poch(-N - al + half, k)
                .div_poch(-ga - N / R(2) + half, k)
                .div_factorial(k);
            return t.value();
        });
    add("hahn-Q-symmetric", "hahn-Q", "hahn-Q", {"alpha", "gamma", "N"}, 2,
        "Q_n(x; alpha, alpha, N) in Q_{n-2k}(x; gamma, gamma, N)",
        pick({{"alpha", "alpha"}, {"beta", "alpha"}, {"N", "N"}}), pick({{"alpha", "gamma"}, {"beta", "gamma"}, {"N", "N"}}),
        [](long n, long k, const Par& p) {
            D al = dget(p, "alpha"), ga = dget(p, "gamma"), N(n);
            L t;
            t.mul_poch(al + half, n)
                .mul_poch(R(2) * ga + R(1), n)
                .div_poch(ga + half, n)
                .div_poch(R(2) * al + R(1), n)
                .mul_poch(-N / R(2), k)
                .mul_poch(-(N - R(1)) / R(2), k)
                .mul_poch(al - ga, k)
                .mul_poch(R(3, 4) - ga / R(2) - N / R(2), k)
                .mul_poch(-ga - N - half, k)
                .div_poch(-ga - N / R(2), k)
                .div_poch(-ga / R(2) - N / R(2) - R(1, 4), k)
                .div_poch(-N - al + half, k)
                .div_poch(-ga - N / R(2) + half, k)
                .div_factorial(k);
            return t.value();
        });
    add("hahn-Q-beta", "hahn-Q", "hahn-Q", {"alpha", "beta", "delta", "N"}, 1,
        "Q_n(x; alpha, beta, N) in Q_m(x; alpha, delta, N)", pick({{"alpha", "alpha"}, {"beta", "beta"}, {"N", "N"}}),
        pick({{"alpha", "alpha"}, {"beta", "delta"}, {"N", "N"}}), [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), de = dget(p, "delta"), N(n), M(m);
            L t;
            t.mul_poch(be - de, n)
                .mul(sgn(n + m))
                .div_poch(R(2) + al + de, n)
                .mul(al + de + R(1) + R(2) * M)
                .div(al + de + R(1))
                .mul_poch(-N, m)
                .mul_poch(R(1) + al + de, m)
                .mul_poch(N + R(1) + al + be, m)
                .div_poch(al + R(2) + N + de, m)
                .div_poch(R(1) - be + de - N, m)
                .div_factorial(m);
            return t.value();
        });
    add("hahn-Q-alpha", "hahn-Q", "hahn-Q", {"alpha", "beta", "gamma", "N"}, 1,
        "Q_n(x; alpha, beta, N) in Q_m(x; gamma, beta, N)", pick({{"alpha", "alpha"}, {"beta", "beta"}, {"N", "N"}}),
        pick({{"alpha", "gamma"}, {"beta", "beta"}, {"N", "N"}}), [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), ga = dget(p, "gamma"), N(n), M(m);
            L t;
            t.mul_poch(al - ga, n)
                .mul_poch(be + R(1), n)
                .div_poch(al + R(1), n)
                .div_poch(R(2) + be + ga, n)
                .mul(be + ga + R(1) + R(2) * M)
                .div(be + ga + R(1))
                .mul_poch(-N, m)
                .mul_poch(R(1) + be + ga, m)
                .mul_poch(ga + R(1), m)
                .mul_poch(N + R(1) + al + be, m)
                .div_poch(be + R(1), m)
                .div_poch(be + ga + N + R(2), m)
                .div_poch(ga - al - N + R(1), m)
                .div_factorial(m);
            return t.value();
        });

    // ---- Meixner, Krawtchouk, Charlier, K-family
    add("meixner-gamma", "meixner", "meixner", {"gamma", "delta", "mu"}, 1, "m^(gamma,mu)_n in m^(delta,mu)_m",
        pick({{"gamma", "gamma"}, {"mu", "mu"}}), pick({{"gamma", "delta"}, {"mu", "mu"}}),
        [](long n, long m, const Par& p) {
            D g = dget(p, "gamma"), de = dget(p, "delta"), N(n);
            L t;
            t.mul_poch(g - de, n).mul_poch(-N, m).div_poch(de - N + R(1) - g, m).div_factorial(m);
            return t.value();
        });
    add("meixner-gamma-monic", "meixner-monic", "meixner-monic", {"gamma", "delta", "mu"}, 1,
        "monic m^(gamma,mu)_n in monic m^(delta,mu)_m", pick({{"gamma", "gamma"}, {"mu", "mu"}}),
        pick({{"gamma", "delta"}, {"mu", "mu"}}), [](long n, long m, const Par& p) {
            D g = dget(p, "gamma"), de = dget(p, "delta"), mu = dget(p, "mu"), N(n);
            L t;
            t.mul_pow(mu, n - m)
                .mul_pow(mu - R(1), m - n)
                .mul_poch(g - de, n)
                .mul_poch(-N, m)
                .div_poch(de - N + R(1) - g, m)
                .div_factorial(m);
            return t.value();
        });
    add("meixner-mu", "meixner", "meixner", {"gamma", "mu", "nu"}, 1, "m^(gamma,mu)_n in m^(gamma,nu)_m",
        pick({{"gamma", "gamma"}, {"mu", "mu"}}), pick({{"gamma", "gamma"}, {"mu", "nu"}}),
        [](long n, long m, const Par& p) {
            D g = dget(p, "gamma"), mu = dget(p, "mu"), nu = dget(p, "nu"), N(n);
            L t;
            t.mul_pow(nu - mu, n)
                .mul_pow(mu * (nu - R(1)), -n)
                .mul_poch(g, n)
                .mul_poch(-N, m)
                .div_poch(g, m)
                .div_factorial(m)
                .mul_pow(-nu * (mu - R(1)), m)
                .mul_pow(nu - mu, -m);
            return t.value();
        });
    add("meixner-mu-monic", "meixner-monic", "meixner-monic", {"gamma", "mu", "nu"}, 1,
        "monic m^(gamma,mu)_n in monic m^(gamma,nu)_m", pick({{"gamma", "gamma"}, {"mu", "mu"}}),
        pick({{"gamma", "gamma"}, {"mu", "nu"}}), [](long n, long m, const Par& p) {
            D g = dget(p, "gamma"), mu = dget(p, "mu"), nu = dget(p, "nu"), N(n);
            L t;
            t.mul_pow(nu - mu, n - m)
                .mul_pow((mu - R(1)) * (nu - R(1)), m - n)
                .mul_poch(g, n)
                .mul_poch(-N, m)
                .mul(sgn(m))
                .div_poch(g, m)
                .div_factorial(m);
            return t.value();
        });
    add("krawtchouk-p", "krawtchouk", "krawtchouk", {"p", "q", "N"}, 1, "k^(p)_n(x,N) in k^(q)_m(x,N)",
        pick({{"p", "p"}, {"N", "N"}}), pick({{"p", "q"}, {"N", "N"}}), [](long n, long m, const Par& p) {
            D pp = dget(p, "p"), q = dget(p, "q"), NN = dget(p, "N"), N(n);
            L t;
            t.mul_pow(pp - q, n - m).mul_poch(-NN, n).mul_poch(-N, m).mul(sgn(m)).div_factorial(n).div_poch(-NN, m);
            return t.value();
        });
    add("krawtchouk-p-monic", "krawtchouk-monic", "krawtchouk-monic", {"p", "q", "N"}, 1,
        "monic k^(p)_n(x,N) in monic k^(q)_m(x,N)", pick({{"p", "p"}, {"N", "N"}}), pick({{"p", "q"}, {"N", "N"}}),
        [](long n, long m, const Par& p) {
            D pp = dget(p, "p"), q = dget(p, "q"), NN = dget(p, "N"), N(n);
            L t;
            t.mul_pow(pp - q, n - m).mul_poch(-NN, n).mul_poch(-N, m).mul(sgn(m)).div_poch(-NN, m).div_factorial(m);
            return t.value();
        });
    add("krawtchouk-N", "krawtchouk", "krawtchouk", {"p", "N", "M"}, 1, "k^(p)_n(x,N) in k^(p)_m(x,M)",
        pick({{"p", "p"}, {"N", "N"}}), pick({{"p", "p"}, {"N", "M"}}), [](long n, long m, const Par& p) {
            D pp = dget(p, "p"), NN = dget(p, "N"), MM = dget(p, "M"), N(n);
            L t;
            t.mul_pow(pp, n - m).mul_poch(MM - NN, n).mul_poch(-N, m).div_factorial(n).div_poch(NN - MM - N + R(1), m);
            return t.value();
        });
    add("krawtchouk-N-monic", "krawtchouk-monic", "krawtchouk-monic", {"p", "N", "M"}, 1,
        "monic k^(p)_n(x,N) in monic k^(p)_m(x,M)", pick({{"p", "p"}, {"N", "N"}}), pick({{"p", "p"}, {"N", "M"}}),
        [](long n, long m, const Par& p) {
            D pp = dget(p, "p"), NN = dget(p, "N"), MM = dget(p, "M"), N(n);
            L t;
            t.mul_pow(pp, n - m).mul_poch(MM - NN, n).mul_poch(-N, m).div_poch(NN - MM - N + R(1), m).div_factorial(m);
            return t.value();
        });
    add("charlier", "charlier", "charlier", {"mu", "nu"}, 1, "c^(mu)_n in c^(nu)_m", pick({{"mu", "mu"}}),
        pick({{"mu", "nu"}}), [](long n, long m, const Par& p) {
            D mu = dget(p, "mu"), nu = dget(p, "nu"), N(n);
            L t;
            t.mul(sgn(n)).mul_pow(nu, m).mul_pow(mu, -n).mul_pow(nu - mu, n - m).mul_poch(-N, m).div_factorial(m);
            return t.value();
        });
    add("charlier-monic", "charlier-monic", "charlier-monic", {"mu", "nu"}, 1, "monic c^(mu)_n in monic c^(nu)_m",
        pick({{"mu", "mu"}}), pick({{"mu", "nu"}}), [](long n, long m, const Par& p) {
            D mu = dget(p, "mu"), nu = dget(p, "nu"), N(n);
            L t;
            t.mul(sgn(m)).mul_pow(nu - mu, n - m).mul_poch(-N, m).div_factorial(m);
            return t.value();
        });
    // K-family: the Pochhammer in m sits in the denominator
    add("k-family-beta", "k-family", "k-family", {"alpha", "beta", "delta"}, 1, "K^(alpha,beta)_n in K^(alpha,delta)_m",
        pick({{"alpha", "alpha"}, {"beta", "beta"}}), pick({{"alpha", "alpha"}, {"beta", "delta"}}),
        [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), de = dget(p, "delta"), N(n);
            L t;
            t.mul_poch((be - de) / al, n)
                .mul_pow(al, n - m)
                .mul_poch(-N, m)
                .div_poch((al * (R(1) - N) - be + de) / al, m)
                .div_factorial(m);
            return t.value();
        });
    add("k-family-beta-monic", "k-family-monic", "k-family-monic", {"alpha", "beta", "delta"}, 1,
        "monic K^(alpha,beta)_n in monic K^(alpha,delta)_m", pick({{"alpha", "alpha"}, {"beta", "beta"}}),
        pick({{"alpha", "alpha"}, {"beta", "delta"}}), [](long n, long m, const Par& p) {
            D al = dget(p, "alpha"), be = dget(p, "beta"), de = dget(p, "delta"), N(n);
            L t;
            t.mul_poch((be - de) / al, n)
                .mul_poch(-N, m)
                .div_poch((al * (R(1) - N) - be + de) / al, m)
                .div_factorial(m);
            return t.value();
        });
    return v;
}

std::vector<ParameterDerivative> build_derivatives() {
    std::vector<ParameterDerivative> v;
    auto add = [&](std::string name, std::string family, std::string param, std::vector<std::string> params,
                   std::string desc, std::function<R(long, long, const Par&)> term) {
        v.push_back({std::move(name), std::move(family), std::move(param), std::move(params), std::move(desc),
                     std::move(term)});
    };
    // sum_{j<n} 1/(s + j + n)
    auto harmonic = [](R s, long n) {
        R acc(0);
        for (long j = 0; j < n; ++j) acc += R(1) / (s + R(j + n));
        return acc;
    };

    add("jacobi-alpha", "jacobi", "alpha", {"alpha", "beta"}, "d/d alpha of P^(alpha,beta)_n",
        [=](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), N(n), M(m);
            if (m == n) return harmonic(al + be + R(1), n);
            return (al + be + R(1) + R(2) * M) / (N - M) * pochhammer(be + M + R(1), n - m) /
                   pochhammer(al + be + M + R(1), n - m) / (al + be + R(1) + M + N);
        });
    add("jacobi-monic-alpha", "jacobi-monic", "alpha", {"alpha", "beta"}, "d/d alpha of the monic Jacobi polynomial",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), N(n), M(m);
            if (m == n) return R(0);
            return power(R(2), n - m) / (N - M) * binomial(R(2) * M + al + be, m) /
                   binomial(R(2) * N + al + be, n) * (al + be + R(1) + R(2) * M) / (al + be + R(1) + M + N) *
                   pochhammer(be + M + R(1), n - m) / pochhammer(al + be + M + R(1), n - m);
        });
    add("jacobi-beta", "jacobi", "beta", {"alpha", "beta"}, "d/d beta of P^(alpha,beta)_n",
        [=](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), N(n), M(m);
            if (m == n) return harmonic(al + be + R(1), n);
            return sgn(n - m) * (al + be + R(1) + R(2) * M) / (N - M) * pochhammer(al + M + R(1), n - m) /
                   pochhammer(al + be + M + R(1), n - m) / (al + be + R(1) + M + N);
        });
    add("jacobi-monic-beta", "jacobi-monic", "beta", {"alpha", "beta"}, "d/d beta of the monic Jacobi polynomial",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), N(n), M(m);
            if (m == n) return R(0);
            return power(R(-2), n - m) / (N - M) * binomial(R(2) * M + al + be, m) /
                   binomial(R(2) * N + al + be, n) * (al + be + R(1) + R(2) * M) / (al + be + R(1) + M + N) *
                   pochhammer(al + M + R(1), n - m) / pochhammer(al + be + M + R(1), n - m);
        });
    add("gegenbauer-alpha", "gegenbauer", "alpha", {"alpha"}, "d/d alpha of C^alpha_n",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), N(n), M(m);
            if (m == n) {
                R acc(0);
                for (long j = 0; j < n; ++j) {
                    R J(j);
                    acc += R(2) * (R(1) + J) / ((R(2) * al + J) * (R(2) * al + R(1) + R(2) * J)) +
                           R(2) / (R(2) * al + J + N);
                }
                return acc;
            }
            return R(2) * (R(1) + sgn(n - m)) * (al + M) / ((R(2) * al + M + N) * (N - M));
        });
    add("gegenbauer-monic-alpha", "gegenbauer-monic", "alpha", {"alpha"}, "d/d alpha of the monic Gegenbauer polynomial",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), N(n), M(m);
            if (m == n) return R(0);
            return power(R(2), m - n + 1) * pochhammer(al, m) * factorial<R>(n) / (pochhammer(al, n) * factorial<R>(m)) *
                   (R(1) + sgn(n - m)) * (al + M) / ((R(2) * al + M + N) * (N - M));
        });
    add("gegenbauer-monic-alpha-even", "gegenbauer-monic", "alpha", {"alpha"},
        "d/d alpha of the monic Gegenbauer polynomial, sum over n-2k", [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), N(n);
            if (m == n || (n - m) % 2) return R(0);
            long k = (n - m) / 2;
            R K(k);
            return factorial<R>(n) / (pochhammer(al + N - R(2) * K, 2 * k) * power(R(4), k) * factorial<R>(n - 2 * k)) *
                   (N - R(2) * K + al) / (K * (N - K + al));
        });
    add("laguerre-alpha", "laguerre", "alpha", {"alpha"}, "d/d alpha of L^(alpha)_n", [](long n, long m, const Par&) {
        if (m == n) return R(0);
        return R(1) / R(n - m);
    });
    add("laguerre-monic-alpha", "laguerre-monic", "alpha", {"alpha"}, "d/d alpha of the monic Laguerre polynomial",
        [](long n, long m, const Par&) {
            if (m == n) return R(0);
            return sgn(n - m) / R(n - m) * factorial<R>(n) / factorial<R>(m);
        });
    add("bessel-alpha", "bessel", "alpha", {"alpha"}, "d/d alpha of B^(alpha)_n", [=](long n, long m, const Par& p) {
        R al = get(p, "alpha"), N(n), M(m);
        if (m == n) return harmonic(al + R(1), n);
        return sgn(n - m) * (R(2) * M + al + R(1)) / (N - M) * factorial<R>(n) /
               (pochhammer(al + M + R(1), n - m) * factorial<R>(m)) / (al + N + M + R(1));
    });
    add("bessel-monic-alpha", "bessel-monic", "alpha", {"alpha"}, "d/d alpha of the monic Bessel polynomial",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), N(n), M(m);
            if (m == n) return R(0);
            return power(R(-2), n - m) / ((N - M) * (al + N + M + R(1))) * factorial<R>(n) /
                   (pochhammer(al + R(2) * M + R(2), 2 * n - 2 * m - 1) * factorial<R>(m));
        });

    add("hahn-alpha", "hahn", "alpha", {"alpha", "beta", "N"}, "d/d alpha of h^(alpha,beta)_n(x,N)",
        [=](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), NN = get(p, "N"), N(n), M(m);
            if (m == n) return harmonic(al + be + R(1), n);
            return sgn(n - m) * (al + be + R(1) + R(2) * M) * pochhammer(R(1) - NN + M, n - m) *
                   pochhammer(be + R(1) + M, n - m) / ((N - M) * pochhammer(al + be + R(1) + M, n - m)) /
                   (al + be + M + N + R(1));
        });
    add("hahn-monic-alpha", "hahn-monic", "alpha", {"alpha", "beta", "N"}, "d/d alpha of the monic Hahn polynomial",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), NN = get(p, "N"), N(n), M(m);
            if (m == n) return R(0);
            return sgn(n - m) * (al + be + R(1) + R(2) * M) / ((al + be + M + N + R(1)) * (N - M)) *
                   pochhammer(R(1) - NN + M, n - m) * pochhammer(be + R(1) + M, n - m) * factorial<R>(n) /
                   (pochhammer(al + be + R(1) + R(2) * M, 2 * n - 2 * m) * factorial<R>(m));
        });
    // the extra -1/(alpha+j+1) only enters the diagonal coefficient
    add("hahn-Q-alpha", "hahn-Q", "alpha", {"alpha", "beta", "N"}, "d/d alpha of Q_n(x; alpha, beta, N)",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), N(n), M(m);
            if (m == n) {
                R acc(0);
                for (long j = 0; j < n; ++j) acc += R(1) / (al + be + R(j + n + 1)) - R(1) / (al + R(j + 1));
                return acc;
            }
            return (al + be + R(1) + R(2) * M) * pochhammer(be + R(1) + M, n - m) * factorial<R>(n) /
                   ((N - M) * pochhammer(al + R(1) + M, n - m) * pochhammer(al + be + R(1) + M, n - m) *
                    factorial<R>(m)) /
                   (al + be + M + N + R(1));
        });
    add("hahn-beta", "hahn", "beta", {"alpha", "beta", "N"}, "d/d beta of h^(alpha,beta)_n(x,N)",
        [=](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), NN = get(p, "N"), N(n), M(m);
            if (m == n) return harmonic(al + be + R(1), n);
            return (al + be + R(1) + R(2) * M) / (N - M) * pochhammer(R(1) - NN + M, n - m) *
                   pochhammer(al + R(1) + M, n - m) / pochhammer(al + be + R(1) + M, n - m) /
                   (al + be + M + N + R(1));
        });
    add("hahn-monic-beta", "hahn-monic", "beta", {"alpha", "beta", "N"}, "d/d beta of the monic Hahn polynomial",
        [](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), NN = get(p, "N"), N(n), M(m);
            if (m == n) return R(0);
            return (al + be + R(1) + R(2) * M) / ((al + be + M + N + R(1)) * (N - M)) *
                   pochhammer(R(1) - NN + M, n - m) * pochhammer(al + R(1) + M, n - m) * factorial<R>(n) /
                   (pochhammer(al + be + R(1) + R(2) * M, 2 * n - 2 * m) * factorial<R>(m));
        });
    add("hahn-Q-beta", "hahn-Q", "beta", {"alpha", "beta", "N"}, "d/d beta of Q_n(x; alpha, beta, N)",
        [=](long n, long m, const Par& p) {
            R al = get(p, "alpha"), be = get(p, "beta"), N(n), M(m);
            if (m == n) return harmonic(al + be + R(1), n);
            return sgn(n - m) * (al + be + R(1) + R(2) * M) / (N - M) * factorial<R>(n) /
                   (pochhammer(al + be + R(1) + M, n - m) * factorial<R>(m)) / (al + be + M + N + R(1));
        });
    add("meixner-mu", "meixner", "mu", {"gamma", "mu"}, "d/d mu of m^(gamma,mu)_n", [](long n, long m, const Par& p) {
        R g = get(p, "gamma"), mu = get(p, "mu"), N(n);
        if (m == n - 1) return N * (g + N - R(1)) / ((R(1) - mu) * mu);
        if (m == n) return -N / ((R(1) - mu) * mu);
        return R(0);
    });
    add("meixner-monic-mu", "meixner-monic", "mu", {"gamma", "mu"}, "d/d mu of the monic Meixner polynomial",
        [](long n, long m, const Par& p) {
            R g = get(p, "gamma"), mu = get(p, "mu"), N(n);
            if (m == n - 1) return N * (R(1) - g - N) / ((R(1) - mu) * (R(1) - mu));
            return R(0);
        });
    add("meixner-gamma", "meixner", "gamma", {"gamma", "mu"}, "d/d gamma of m^(gamma,mu)_n",
        [](long n, long m, const Par&) {
            if (m == n) return R(0);
            return factorial<R>(n) / (factorial<R>(m) * R(n - m));
        });
    add("meixner-monic-gamma", "meixner-monic", "gamma", {"gamma", "mu"}, "d/d gamma of the monic Meixner polynomial",
        [](long n, long m, const Par& p) {
            R mu = get(p, "mu");
            if (m == n) return R(0);
            return power(mu / (mu - R(1)), n - m) * factorial<R>(n) / (factorial<R>(m) * R(n - m));
        });
    add("krawtchouk-p", "krawtchouk", "p", {"p", "N"}, "d/d p of k^(p)_n(x,N)", [](long n, long m, const Par& p) {
        if (m == n - 1) return R(n - 1) - get(p, "N");
        return R(0);
    });
    add("krawtchouk-monic-p", "krawtchouk-monic", "p", {"p", "N"}, "d/d p of the monic Krawtchouk polynomial",
        [](long n, long m, const Par& p) {
            if (m == n - 1) return R(n) * (R(n - 1) - get(p, "N"));
            return R(0);
        });
    add("charlier-mu", "charlier", "mu", {"mu"}, "d/d mu of c^(mu)_n", [](long n, long m, const Par& p) {
        R mu = get(p, "mu");
        if (m == n - 1) return R(n) / mu;
        if (m == n) return -R(n) / mu;
        return R(0);
    });
    add("charlier-monic-mu", "charlier-monic", "mu", {"mu"}, "d/d mu of the monic Charlier polynomial",
        [](long n, long m, const Par&) { return m == n - 1 ? R(-n) : R(0); });
    add("k-family-beta", "k-family", "beta", {"alpha", "beta"}, "d/d beta of K^(alpha,beta)_n",
        [](long n, long m, const Par& p) {
            if (m == n) return R(0);
            return power(get(p, "alpha"), n - m - 1) * factorial<R>(n) / (R(n - m) * factorial<R>(m));
        });
    add("k-family-monic-beta", "k-family-monic", "beta", {"alpha", "beta"}, "d/d beta of the monic K polynomial",
        [](long n, long m, const Par& p) {
            if (m == n) return R(0);
            return factorial<R>(n) / (get(p, "alpha") * R(n - m) * factorial<R>(m));
        });
    return v;
}

}  // namespace

const std::vector<ClosedConnection>& closed_connections() {
    static const std::vector<ClosedConnection> v = build_connections();
    return v;
}

const ClosedConnection& find_closed_connection(const std::string& name) {
    for (const auto& c : closed_connections())
        if (c.name == name) return c;
    throw std::invalid_argument("unknown connection formula '" + name + "'");
}

ConnectionRow<Rational> closed_form_connection(const std::string& name, const std::map<std::string, Rational>& params,
                                               long n) {
    const auto& c = find_closed_connection(name);
    if (n < 0) throw std::invalid_argument("negative degree");
    for (const auto& [k, v] : params) {
        (void)v;
        if (std::find(c.params.begin(), c.params.end(), k) == c.params.end())
            throw std::invalid_argument("formula '" + name + "' has no parameter '" + k + "'");
    }
    ConnectionRow<Rational> row{n, std::vector<Rational>(n + 1, Rational(0))};
    for (long j = 0; c.step * j <= n; ++j) {
        long m = c.step == 2 ? n - 2 * j : j;
        try {
            row.coeffs[m] = c.term(n, j, params);
        } catch (const std::domain_error&) {
            throw AdmissibilityError(name, n, "Pochhammer denominator at m=" + std::to_string(m));
        }
    }
    return row;
}

const std::vector<ParameterDerivative>& parameter_derivatives() {
    static const std::vector<ParameterDerivative> v = build_derivatives();
    return v;
}

const ParameterDerivative& find_parameter_derivative(const std::string& name) {
    for (const auto& d : parameter_derivatives())
        if (d.name == name) return d;
    throw std::invalid_argument("unknown parameter derivative '" + name + "'");
}

ConnectionRow<Rational> parameter_derivative(const std::string& name, const std::map<std::string, Rational>& params,
                                             long n) {
    const auto& d = find_parameter_derivative(name);
    if (n < 0) throw std::invalid_argument("negative degree");
    ConnectionRow<Rational> row{n, std::vector<Rational>(n + 1, Rational(0))};
    for (long m = 0; m <= n; ++m) {
        try {
            row.coeffs[m] = d.term(n, m, params);
        } catch (const std::domain_error&) {
            throw AdmissibilityError(name, n, "denominator at m=" + std::to_string(m));
        }
    }
    return row;
}

ConnectionRow<Rational> parameter_derivative_oracle(const std::string& family, const std::string& param,
                                                    const std::map<std::string, Rational>& params, long n) {
    using RF = RationalFunction;
    auto at = params.find(param);
    if (at == params.end()) throw std::invalid_argument("missing value for parameter '" + param + "'");
    std::map<std::string, RF> sym;
    for (const auto& [k, v] : params) sym[k] = k == param ? RF::t() : RF(v);
    auto ps = oracle_polynomial(catalog<RF>(family, sym), n);
    std::vector<Rational> dc;
    for (const auto& c : ps.coeffs()) dc.push_back(c.derivative().eval(at->second));
    auto q = generate(catalog<Rational>(family, params), n);
    auto c = expand_in(Polynomial<Rational>(dc), q);
    c.resize(n + 1, Rational(0));
    return {n, std::move(c)};
}

}  // namespace opoly
