#include "doctest.h"

#include "opoly/field.hpp"
#include "opoly/io.hpp"
#include "opoly/oracle.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>

using namespace opoly;
using R = Rational;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + OPOLY_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    std::string out;
    std::array<char, 4096> buf;
    for (size_t k; (k = fread(buf.data(), 1, buf.size(), f)) > 0;) out.append(buf.data(), k);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Json json_of(const Run& r) {
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

void same_spec(const FamilySpec<R>& x, const FamilySpec<R>& y) {
    CHECK(x.kind == y.kind);
    CHECK(x.a == y.a);
    CHECK(x.b == y.b);
    CHECK(x.c == y.c);
    CHECK(x.d == y.d);
    CHECK(x.e == y.e);
    for (long n = 0; n <= 5; ++n) CHECK(x.k(n) == y.k(n));
}

const std::vector<std::string> families{
    "hermite",
    "laguerre:alpha=1/2",
    "jacobi:alpha=1/2,beta=-1/3",
    "gegenbauer-monic:alpha=2/5",
    "bessel:alpha=1/3",
    "charlier:mu=3/2",
    "meixner:gamma=2,mu=1/3",
    "krawtchouk:p=1/3,N=9",
    "hahn:alpha=1/2,beta=1/3,N=37/3",
    "hahn-Q:alpha=1/2,beta=1/3,N=7",
    "discrete-chebyshev:N=17/2",
    "k-family:alpha=2,beta=1/3",
    "raw:kind=discrete,a=-1,b=2,c=3,d=-3,e=5",
};

}  // namespace

TEST_CASE("parse_family") {
    same_spec(parse_family("hermite"), catalog<R>("hermite", {}));
    same_spec(parse_family("meixner:gamma=2,mu=1/3"), catalog<R>("meixner", {{"gamma", R(2)}, {"mu", R(1, 3)}}));
    auto raw = parse_family("raw:kind=continuous,a=0,b=1,c=0,d=-1,e=3/2,k=monic");
    auto lag = catalog<R>("laguerre-monic", {{"alpha", R(1, 2)}});
    same_spec(raw, lag);
    CHECK(generate(raw, 6) == generate(lag, 6));

    CHECK_THROWS_AS(parse_family("jacobi:alpha=0.5,beta=1"), ParseError);
    CHECK_THROWS_AS(parse_family("jacobi:alpha=1e3,beta=1"), ParseError);
    CHECK_THROWS_AS(parse_family("legendre"), ParseError);
    CHECK_THROWS_AS(parse_family("jacobi:alpha=1/2"), ParseError);
    CHECK_THROWS_AS(parse_family("hermite:alpha=1"), ParseError);
    CHECK_THROWS_AS(parse_family("jacobi:alpha=1/2,alpha=1/3,beta=0"), ParseError);
    CHECK_THROWS_AS(parse_family("jacobi:alpha"), ParseError);
    CHECK_THROWS_AS(parse_family("raw:kind=continuous,a=0,b=1,c=0,d=-1"), ParseError);
    CHECK_THROWS_AS(parse_family("raw:kind=continuous,a=0,b=1,c=0,d=-1,e=1,k=2^n"), ParseError);
    CHECK_THROWS_AS(parse_family("raw:kind=weird,a=0,b=1,c=0,d=-1,e=1"), ParseError);
    CHECK_THROWS_AS(parse_family("raw:kind=continuous,a=0,b=1,c=0,d=0,e=1"), AdmissibilityError);
    CHECK_THROWS_AS(parse_family("gegenbauer:alpha=0"), AdmissibilityError);
}

TEST_CASE("family JSON round trip") {
    for (const auto& f : families) {
        CAPTURE(f);
        auto s = parse_family(f);
        auto j = family_to_json(s);
        auto back = family_from_json(Json::parse(j.dump()));
        same_spec(back, s);
        CHECK(family_to_json(back).dump() == j.dump());
    }
    CHECK_THROWS_AS(family_from_json(Json{{"kind", "continuous"}, {"a", 0.5}}), ParseError);
    CHECK_THROWS_AS(family_from_json(Json::parse(R"({"name":"hermite","a":"1"})")), ParseError);
}

TEST_CASE("documented CLI examples") {
    auto t = json_of(run("tabulate --family hermite --what recurrence --n-max 5 --format json"));
    validate_table_json(t);
    auto table = table_from_json(t);
    CHECK(table.relation == "recurrence");
    REQUIRE(table.entries.size() == 6);
    for (const auto& [n, tr] : table.entries) {
        CHECK(tr.hi == R(2));
        CHECK(tr.mid == R(0));
        CHECK(tr.lo == R(2 * n));
    }

    auto v = run("verify --family jacobi:alpha=1/2,beta=-1/3 --n-max 8");
    CHECK(v.code == 0);
    auto rep = Json::parse(v.out);
    CHECK(rep["ok"] == true);
    CHECK(rep["entries"].size() > 50);
    for (const auto& e : rep["entries"]) CHECK(e["residual"] == "0");

    auto row = row_from_json(json_of(run("connect --from laguerre:alpha=2 --to laguerre:alpha=0 --n 3")));
    REQUIRE(row.n == 3);
    for (long m = 0; m <= 3; ++m) CHECK(row.coeffs[m] == pochhammer(R(2), 3 - m) / factorial<R>(3 - m));
}

TEST_CASE("JSON outputs re-parse under their schemas") {
    for (const auto& f : families) {
        CAPTURE(f);
        auto s = parse_family(f);
        std::vector<std::string> rels{"recurrence", "derivative", "starred", "primed", "hatted"};
        if (s.kind == Kind::Discrete) rels.push_back("delta");
        for (const auto& w : rels) {
            auto j = json_of(run("tabulate --family " + f + " --what " + w + " --n-max 4"));
            CHECK_NOTHROW(validate_table_json(j));
            CHECK(table_to_json(table_from_json(j)).dump() == j.dump());
        }
        auto g = json_of(run("generate --family " + f + " --n-max 4"));
        REQUIRE(g["polynomials"].size() == 5);
        auto p = generate(s, 4);
        for (long n = 0; n <= 4; ++n) {
            auto r = row_from_json(g["polynomials"][n]);
            CHECK(Polynomial<R>(r.coeffs) == p[n]);
        }
        same_spec(family_from_json(g["family"]), s);

        auto rp = json_of(run("repr --family " + f + " --n 4"));
        for (const auto& d : rp["representations"]) CHECK_NOTHROW(validate_descriptor_json(d));
        CHECK_NOTHROW(validate_row_json(rp["forward"]));
        CHECK_NOTHROW(validate_row_json(rp["inverse"]));
    }
    auto row = json_of(run("connect --from hahn:alpha=1/2,beta=1/3,N=7 --to hahn:alpha=1/2,beta=5/7,N=7 --n 5"));
    CHECK_NOTHROW(validate_row_json(row));
    CHECK(row_to_json(row_from_json(row)).dump() == row.dump());
    auto d = json_of(run("param-deriv --family jacobi:alpha=1/2,beta=1/3 --param alpha --n 4"));
    CHECK(row_from_json(d) == parameter_derivative_oracle("jacobi", "alpha", {{"alpha", R(1, 2)}, {"beta", R(1, 3)}}, 4));

    CHECK_THROWS_AS(validate_row_json(Json::parse(R"({"n":1,"coeffs":{"0":"1"}})")), ParseError);
    CHECK_THROWS_AS(validate_row_json(Json::parse(R"({"n":0,"coeffs":{"0":0.5}})")), ParseError);
    CHECK_THROWS_AS(validate_table_json(Json::parse(R"({"relation":"other","entries":[]})")), ParseError);
}

TEST_CASE("connect and param-deriv agree across methods") {
    auto a = run("connect --from jacobi:alpha=1/2,beta=1/3 --to jacobi:alpha=5/2,beta=1/3 --n 6 --method recurrence");
    auto b = run("connect --from jacobi:alpha=1/2,beta=1/3 --to jacobi:alpha=5/2,beta=1/3 --n 6 --method oracle");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run("param-deriv --family meixner:gamma=2,mu=1/3 --param mu --n 5 --method formula");
    auto d = run("param-deriv --family meixner:gamma=2,mu=1/3 --param mu --n 5 --method oracle");
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("output is deterministic across runs and thread counts") {
    for (const std::string args : {"verify --family hahn:alpha=1/2,beta=1/3,N=37/3 --n-max 7",
                                   "tabulate --family jacobi:alpha=1/2,beta=-1/3 --what primed --n-max 9 --format csv",
                                   "generate --family meixner:gamma=2,mu=1/3 --n-max 6 --format pretty",
                                   "repr --family krawtchouk:p=1/3,N=9 --n 5 --format pretty"}) {
        CAPTURE(args);
        auto one = run(args, "OPOLY_THREADS=1");
        auto again = run(args, "OPOLY_THREADS=1");
        auto many = run(args, "OPOLY_THREADS=8");
        CHECK(one.code == 0);
        CHECK(!one.out.empty());
        CHECK(one.out == again.out);
        CHECK(one.out == many.out);
    }
}

TEST_CASE("exit codes") {
    CHECK(run("tabulate --family hermite --n-max 3 --bogus").code == 1);
    CHECK(run("tabulate --family hermite").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("tabulate --family jacobi:alpha=0.5,beta=1 --n-max 3").code == 1);
    CHECK(run("tabulate --family legendre --n-max 3").code == 1);
    CHECK(run("tabulate --family hermite --n-max 3 --format xml").code == 1);
    CHECK(run("tabulate --family hermite --what delta --n-max 3").code == 1);
    CHECK(run("verify --family hermite --n-max 3 --relations bogus").code == 1);
    CHECK(run("tabulate --family hermite --n-max 3", "OPOLY_THREADS=0").code == 1);
    CHECK(run("tabulate --family hermite --n-max 3", "OPOLY_THREADS=x").code == 1);
    CHECK(run("connect --from hermite --to charlier:mu=1 --n 2").code == 1);
    CHECK(run("connect --from hermite --to laguerre:alpha=0 --n 3 --method recurrence").code == 1);
    CHECK(run("param-deriv --family hermite --param alpha --n 2").code == 1);

    CHECK(run("generate --family gegenbauer:alpha=0 --n-max 3").code == 2);
    CHECK(run("generate --family raw:kind=continuous,a=1,b=0,c=0,d=0,e=1 --n-max 3").code == 2);
    CHECK(run("connect --from bessel:alpha=0 --to bessel:alpha=-3 --n 2").code == 2);
    CHECK(run("verify --family discrete-chebyshev:N=6 --n-max 6").code == 2);

    CHECK(run("tabulate --family hermite --n-max 3").code == 0);
    CHECK(run("connect --from hermite --to laguerre:alpha=0 --n 3").code == 0);
}

TEST_CASE("verify exits 3 exactly when a residual is nonzero") {
    for (const auto& f : families) {
        CAPTURE(f);
        auto r = run("verify --family " + f + " --n-max 6");
        REQUIRE((r.code == 0 || r.code == 3));
        auto rep = Json::parse(r.out);
        bool any_nonzero = false;
        for (const auto& e : rep["entries"]) any_nonzero = any_nonzero || e["residual"] != "0";
        CHECK((r.code == 3) == any_nonzero);
        CHECK(rep["ok"] == !any_nonzero);
    }
    auto scoped = Json::parse(run("verify --family charlier:mu=3/2 --n-max 4 --relations delta,series").out);
    for (const auto& e : scoped["entries"]) {
        std::string rel = e["relation"];
        CHECK((rel == "delta" || rel.rfind("series:", 0) == 0));
    }
}

TEST_CASE("csv and pretty formats") {
    auto c = run("tabulate --family hermite --n-max 3 --format csv");
    CHECK(c.out == "n,lo,mid,hi\n0,0,0,2\n1,2,0,2\n2,4,0,2\n3,6,0,2\n");
    auto p = run("connect --from laguerre:alpha=2 --to laguerre:alpha=0 --n 1 --format pretty");
    CHECK(p.out == "C_0(1) = 2\nC_1(1) = 1\n");
}
