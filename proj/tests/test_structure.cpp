#include "doctest.h"
#include "opoly/oracle.hpp"
#include "printed_values.hpp"
#include "samples.hpp"

using namespace opoly;
using R = Rational;
using P = Polynomial<R>;

TEST_CASE("recurrence examples") {
    auto h = catalog<R>("hermite", {});
    for (long n = 1; n <= 10; ++n) CHECK(recurrence_coeffs(h, n) == Triple<R>{R(2 * n), R(0), R(2)});
    R al(1, 3);
    auto l = catalog<R>("laguerre", {{"alpha", al}});
    for (long n = 1; n <= 10; ++n) {
        R N(n);
        CHECK(recurrence_coeffs(l, n) ==
              Triple<R>{(N + al) / (N + R(1)), (R(2) * N + al + R(1)) / (N + R(1)), -R(1) / (N + R(1))});
    }
    R mu(5, 2);
    auto c = catalog<R>("charlier", {{"mu", mu}});
    for (long n = 0; n <= 10; ++n) {
        auto t = recurrence_coeffs(c, n);
        CHECK(t.hi == -R(1) / mu);
        CHECK(t.mid == (R(n) + mu) / mu);
    }
    CHECK(generate(h, 3) == std::vector<P>{P({1}), P({0, 2}), P({-2, 0, 4}), P({0, -12, 0, 8})});
    auto c1 = catalog<R>("charlier", {{"mu", R(1)}});
    CHECK(generate(c1, 2)[2] == P({1, -3, 1}));
}

TEST_CASE("recurrence triple equals the brute-force solve") {
    for (const auto& smp : test::samples()) {
        CAPTURE(test::label(smp));
        auto s = test::build(smp);
        auto q = oracle_family(s, 11);
        for (long n = 1; n <= 10; ++n) {
            P x = P::x();
            auto sol = solve_linear<R>({x * q[n], q[n], -q[n - 1]}, q[n + 1]);
            REQUIRE(sol);
            auto t = recurrence_coeffs(s, n);
            CHECK(sol->values[0] == t.hi);
            CHECK(sol->values[1] == t.mid);
            CHECK(sol->values[2] == t.lo);
        }
    }
}

TEST_CASE("derivative rule examples") {
    auto h = catalog<R>("hermite", {});
    for (long n = 1; n <= 6; ++n) CHECK(derivative_rule_coeffs(h, n) == Triple<R>{R(2 * n), R(0), R(0)});
    auto l = catalog<R>("laguerre", {{"alpha", R(2)}});
    for (long n = 1; n <= 6; ++n) CHECK(derivative_rule_coeffs(l, n).hi == R(0));
    auto c = catalog<R>("charlier", {{"mu", R(3, 2)}});
    auto p = generate(c, 2);
    auto t = delta_rule_coeffs(c, 1);
    CHECK((sigma_poly(c) + tau_poly(c)) * delta(p[1]) == combine(t, p[0], p[1], p[2]));
}

TEST_CASE("structure relations hold exactly for every family") {
    for (const auto& smp : test::samples()) {
        for (bool monic : {false, true}) {
            CAPTURE(test::label(smp));
            auto rep = verify_structure(test::build(smp, monic), 11);
            for (const auto& e : rep.entries)
                if (!e.pass) FAIL_CHECK(e.relation << " n=" << e.n << " residual " << e.residual);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("structure report names the relations") {
    auto rep = verify_structure(catalog<R>("meixner", {{"gamma", R(2)}, {"mu", R(1, 3)}}), 8);
    std::set<std::string> rel;
    for (const auto& e : rep.entries) rel.insert(e.relation);
    CHECK(rel == std::set<std::string>{"equation", "recurrence", "derivative", "delta", "starred", "primed", "hatted"});
    CHECK(rep.entries.size() == 7 * 7);
}

TEST_CASE("starred triple by substitution") {
    for (const auto& smp : test::samples()) {
        CAPTURE(test::label(smp));
        auto s = test::build(smp);
        for (long n = 1; n <= 10; ++n) {
            auto f = neighbour_coeffs(s, n).starred;
            auto g = starred_by_substitution(s, n);
            CHECK(f.hi == g.hi);
            CHECK(f.mid == g.mid);
            // at n = 1 the lo entry multiplies the derivative of a constant
            if (n >= 2) CHECK(f.lo == g.lo);
        }
    }
}

TEST_CASE("neighbour triples equal the brute-force solve") {
    for (const auto& smp : test::samples()) {
        CAPTURE(test::label(smp));
        auto s = test::build(smp);
        bool cont = s.kind == Kind::Continuous;
        auto p = oracle_family(s, 11);
        std::vector<P> dp;
        for (const auto& q : p) dp.push_back(cont ? derivative(q) : delta(q));
        // dp[m+1] has degree m; shift so that index m carries degree m
        std::vector<P> basis(dp.begin() + 1, dp.end());
        for (long n = 2; n <= 10; ++n) {
            auto t = neighbour_coeffs(s, n);
            P sig = sigma_poly(s);
            P second = cont ? sig * derivative(derivative(p[n])) : sig * delta(nabla(p[n]));
            auto st = solve_triple(P::x() * dp[n], basis, n - 1);
            auto pr = solve_triple(second, basis, n - 1);
            auto ht = solve_triple(p[n], basis, n - 1);
            REQUIRE((st && pr && ht));
            CHECK(Triple<R>{st->values[0], st->values[1], st->values[2]} == t.starred);
            CHECK(Triple<R>{pr->values[0], pr->values[1], pr->values[2]} == t.primed);
            CHECK(Triple<R>{ht->values[0], ht->values[1], ht->values[2]} == t.hatted);
        }
    }
}

TEST_CASE("antiderivative and antidifference") {
    for (const auto& smp : test::samples()) {
        CAPTURE(test::label(smp));
        auto s = test::build(smp);
        auto p = generate(s, 11);
        for (long n = 1; n <= 10; ++n) {
            if (s.kind == Kind::Continuous) {
                auto t = antiderivative(s, n);
                CHECK(derivative(combine(t, p[n - 1], p[n], p[n + 1])) == p[n]);
            } else {
                auto t = antidifference(s, n);
                CHECK(delta(combine(t, p[n - 1], p[n], p[n + 1])) == p[n]);
            }
        }
    }
    CHECK_THROWS_AS(antidifference(catalog<R>("hermite", {}), 2), std::invalid_argument);
}

TEST_CASE("printed antiderivative tables") {
    for (const auto& smp : test::samples()) {
        for (long n = 1; n <= 8; ++n) {
            auto want = test::printed_hatted(smp, n);
            if (!want) continue;
            CAPTURE(test::label(smp));
            CAPTURE(n);
            CHECK(neighbour_coeffs(test::build(smp), n).hatted == *want);
        }
    }
    R al(3, 4);
    auto g = catalog<R>("gegenbauer", {{"alpha", al}});
    CHECK(antiderivative(g, 3) == Triple<R>{-R(1) / (R(2) * (R(3) + al)), R(0), R(1) / (R(2) * (R(3) + al))});
}

TEST_CASE("power antiderivative and falling antidifference") {
    auto pw = catalog<R>("power", {});
    auto ff = catalog<R>("falling-factorial", {});
    for (long n = 1; n <= 10; ++n) {
        CHECK(antiderivative(pw, n) == Triple<R>{R(0), R(0), R(1, n + 1)});
        CHECK(antidifference(ff, n) == Triple<R>{R(0), R(0), R(1, n + 1)});
    }
    auto p = generate(ff, 6);
    for (long n = 0; n <= 6; ++n) CHECK(p[n] == basis_convert(P::unit(n, Basis::FallingFactorial), Basis::Monomial));
}
