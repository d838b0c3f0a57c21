#include "doctest.h"
#include "opoly/oracle.hpp"
#include "samples.hpp"

using namespace opoly;
using R = Rational;

TEST_CASE("lambda_n") {
    auto h = catalog<R>("hermite", {});
    CHECK(lambda_n(h, 3) == R(6));
    CHECK(lambda_n(h, 0) == R(0));
    auto j = catalog<R>("jacobi", {{"alpha", R(1)}, {"beta", R(2)}});
    CHECK(j.d == R(-5));
    CHECK(j.e == R(1));
    CHECK(lambda_n(j, 2) == R(12));
}

TEST_CASE("catalog entries") {
    auto c = catalog<R>("charlier", {{"mu", R(3)}});
    CHECK(c.kind == Kind::Discrete);
    CHECK((c.a == R(0) && c.b == R(1) && c.c == R(0) && c.d == R(-1) && c.e == R(3)));
    CHECK(c.k(2) == R(1, 9));
    auto h = catalog<R>("hermite", {});
    CHECK((h.a == R(0) && h.b == R(0) && h.c == R(1) && h.d == R(-2) && h.e == R(0)));
    CHECK(h.k(5) == R(32));
    auto k = catalog<R>("k-family", {{"alpha", R(3)}, {"beta", R(1, 2)}});
    CHECK((k.a == R(0) && k.b == R(0) && k.c == R(1) && k.d == R(3) && k.e == R(1, 2)));
    CHECK(k.k(3) == R(27));
    auto lm = catalog<R>("laguerre-monic", {{"alpha", R(1, 2)}});
    CHECK(lm.is_monic());
    CHECK(lm.k(7) == R(1));
    auto t = catalog<R>("discrete-chebyshev", {{"N", R(5)}});
    auto hh = catalog<R>("hahn", {{"alpha", R(0)}, {"beta", R(0)}, {"N", R(5)}});
    CHECK((t.b == hh.b && t.e == hh.e && t.d == hh.d && t.k(3) == hh.k(3)));
}

TEST_CASE("catalog rejects bad input") {
    CHECK_THROWS_AS(catalog<R>("legendre", {}), std::invalid_argument);
    CHECK_THROWS_AS(catalog<R>("jacobi", {{"alpha", R(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog<R>("hermite", {{"alpha", R(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog<R>("gegenbauer", {{"alpha", R(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog<R>("meixner", {{"gamma", R(1)}, {"mu", R(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog<R>("charlier", {{"mu", R(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog<R>("krawtchouk", {{"p", R(1)}, {"N", R(3)}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog<R>("jacobi", {{"alpha", R(-1)}, {"beta", R(-1)}}), std::invalid_argument);
}

TEST_CASE("admissibility") {
    auto h = catalog<R>("hermite", {});
    CHECK(admissibility(h, 10).ok);
    FamilySpec<R> bad = h;
    bad.d = R(0);
    auto rep = admissibility(bad, 3);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failures.front().n == 0);
    CHECK(rep.failures.front().expression == "d");
    // gegenbauer(-3/2): d = 2, d + 2an = 2 - 2n vanishes at n = 1
    auto g = catalog<R>("gegenbauer", {{"alpha", R(-3, 2)}});
    auto rg = admissibility(g, 4);
    CHECK_FALSE(rg.ok);
    bool found = false;
    for (const auto& f : rg.failures) found = found || (f.n == 1 && f.expression == "d+2an");
    CHECK(found);
    CHECK_THROWS_AS(generate(g, 4), AdmissibilityError);
    // Q-Hahn with integer N has undefined k_n beyond N
    auto q = catalog<R>("hahn-Q", {{"alpha", R(1)}, {"beta", R(1)}, {"N", R(3)}});
    CHECK(admissibility(q, 2).ok);
    CHECK_FALSE(admissibility(q, 3).ok);
}

TEST_CASE("generated polynomials solve their equation") {
    for (const auto& smp : test::samples()) {
        CAPTURE(test::label(smp));
        auto s = test::build(smp);
        auto p = generate(s, 10);
        for (long n = 0; n <= 10; ++n) {
            CHECK(p[n].degree() == n);
            CHECK(p[n].leading() == s.k(n));
            CHECK(apply_operator(s, p[n], n).is_zero());
        }
    }
}

TEST_CASE("lambda_n matches the operator on monomials") {
    for (const auto& smp : test::samples()) {
        auto s = test::build(smp);
        for (long n = 0; n <= 15; ++n) {
            // With lambda = 0 the operator maps x^n to -lambda_n x^n + lower terms.
            auto image = apply_operator(s, Polynomial<R>::unit(n), 0);
            CHECK(-image.coeff(n) == lambda_n(s, n));
        }
    }
}

TEST_CASE("monic variant is the standard family divided by k_n") {
    for (const auto& smp : test::samples()) {
        CAPTURE(test::label(smp));
        auto s = test::build(smp);
        auto m = test::build(smp, true);
        auto ps = generate(s, 10), pm = generate(m, 10);
        for (long n = 0; n <= 10; ++n) CHECK(pm[n] == ps[n] * (R(1) / s.k(n)));
    }
}

TEST_CASE("affine change of variable") {
    auto j = catalog<R>("jacobi", {{"alpha", R(1, 2)}, {"beta", R(2)}});
    auto u = affine_change(j, R(-2), R(1));
    auto pj = generate(j, 6), pu = generate(u, 6);
    for (long n = 0; n <= 6; ++n)
        for (long v = -3; v <= 3; ++v) CHECK(pu[n].eval(R(v)) == pj[n].eval(R(-2 * v + 1)));
}

TEST_CASE("oracle polynomials equal generated polynomials") {
    for (const auto& smp : test::samples()) {
        auto s = test::build(smp);
        auto p = generate(s, 8);
        for (long n = 0; n <= 8; ++n) CHECK(oracle_polynomial(s, n) == p[n]);
    }
}
