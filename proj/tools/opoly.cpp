// opoly: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 inadmissible parameters,
// 3 verification failure.

#include "opoly/connection.hpp"
#include "opoly/io.hpp"
#include "opoly/oracle.hpp"
#include "opoly/series.hpp"
#include "opoly/structure.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace opoly;
using R = Rational;
using Poly = Polynomial<R>;

namespace {

constexpr int kUsage = 1, kInadmissible = 2, kVerifyFailed = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned thread_count() {
    const char* env = std::getenv("OPOLY_THREADS");
    if (!env) return std::max(1u, std::thread::hardware_concurrency());
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || std::stol(s) <= 0)
        throw UsageError("OPOLY_THREADS must be a positive integer");
    return static_cast<unsigned>(std::stol(s));
}

// Runs job(i) for i in [0, count) on worker threads and returns the results in
// index order. The first failing index (in order) rethrows.
template <class T, class Job>
std::vector<T> parallel_map(long count, Job job) {
    std::vector<std::optional<T>> out(count);
    std::vector<std::exception_ptr> err(count);
    std::atomic<long> next{0};
    auto worker = [&] {
        for (long i; (i = next++) < count;) {
            try {
                out[i] = job(i);
            } catch (...) {
                err[i] = std::current_exception();
            }
        }
    };
    unsigned t = std::min<unsigned>(thread_count(), std::max<long>(count, 1));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<T> res;
    for (long i = 0; i < count; ++i) {
        if (err[i]) std::rethrow_exception(err[i]);
        res.push_back(std::move(*out[i]));
    }
    return res;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

Triple<R> relation_triple(const FamilySpec<R>& s, const std::string& what, long n) {
    if (what == "recurrence") return recurrence_coeffs(s, n);
    if (what == "derivative") return derivative_rule_coeffs(s, n);
    if (what == "delta") {
        if (s.kind != Kind::Discrete) throw UsageError("the delta rule needs a discrete family");
        return delta_rule_coeffs(s, n);
    }
    auto t = neighbour_coeffs(s, n);
    if (what == "starred") return t.starred;
    if (what == "primed") return t.primed;
    return t.hatted;
}

void print_row(const ConnectionRow<R>& row, const std::string& format, const std::string& symbol) {
    if (format == "json") {
        std::cout << row_to_json(row).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,m,coeff\n";
        for (size_t m = 0; m < row.coeffs.size(); ++m)
            std::cout << row.n << "," << m << "," << row.coeffs[m].to_string() << "\n";
    } else {
        for (size_t m = 0; m < row.coeffs.size(); ++m)
            std::cout << symbol << "_" << m << "(" << row.n << ") = " << row.coeffs[m].to_string() << "\n";
    }
}

// ---- verbs

int tabulate(const std::string& fam, const std::string& what, long n_max, const std::string& format) {
    auto s = parse_family(fam);
    const long n0 = what == "recurrence" ? 0 : 1;
    CoefficientTable t{what, {}};
    auto rows = parallel_map<Triple<R>>(std::max(0L, n_max - n0 + 1),
                                        [&](long i) { return relation_triple(s, what, n0 + i); });
    for (long i = 0; i < static_cast<long>(rows.size()); ++i) t.entries.push_back({n0 + i, rows[i]});
    if (format == "json") {
        std::cout << table_to_json(t).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,lo,mid,hi\n";
        for (const auto& [n, tr] : t.entries)
            std::cout << n << "," << tr.lo.to_string() << "," << tr.mid.to_string() << "," << tr.hi.to_string() << "\n";
    } else {
        std::cout << what << " coefficients for " << fam << "\n";
        for (const auto& [n, tr] : t.entries)
            std::cout << "n=" << n << "  lo=" << tr.lo.to_string() << "  mid=" << tr.mid.to_string()
                      << "  hi=" << tr.hi.to_string() << "\n";
    }
    return 0;
}

int generate_cmd(const std::string& fam, long n_max, const std::string& format) {
    auto s = parse_family(fam);
    auto p = generate(s, n_max);
    if (format == "json") {
        Json polys = Json::array();
        for (long n = 0; n <= n_max; ++n) {
            ConnectionRow<R> r{n, p[n].coeffs()};
            r.coeffs.resize(n + 1, R(0));
            polys.push_back(row_to_json(r));
        }
        std::cout << Json{{"family", family_to_json(s)}, {"basis", "monomial"}, {"polynomials", polys}}.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,power,coeff\n";
        for (long n = 0; n <= n_max; ++n) {
            auto c = p[n].coeffs();
            for (size_t m = 0; m < c.size(); ++m) std::cout << n << "," << m << "," << c[m].to_string() << "\n";
        }
    } else {
        for (long n = 0; n <= n_max; ++n) std::cout << "p_" << n << "(x) = " << to_string(p[n]) << "\n";
    }
    return 0;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

const std::vector<std::string>& all_relations() {
    static const std::vector<std::string> v{"equation", "recurrence", "derivative", "delta", "starred",
                                            "primed",   "hatted",     "series",     "oracle"};
    return v;
}

// Series round trips for degree n: forward coefficients, every closed-form
// descriptor and the inverse expansion, all against the generated p_n.
std::vector<ResidualEntry> series_checks(const FamilySpec<R>& s, const std::vector<Poly>& p, long n) {
    std::vector<ResidualEntry> out;
    auto add = [&](const std::string& rel, const Poly& r) {
        out.push_back({rel, n, r.is_zero() ? "0" : to_string(r), r.is_zero()});
    };
    const bool cont = s.kind == Kind::Continuous;
    auto fwd = cont ? power_coeffs(s, n) : falling_coeffs(s, n);
    add(cont ? "series:power" : "series:falling", basis_convert(fwd.polynomial(), Basis::Monomial) - p[n]);
    try {
        for (const auto& d : closed_forms(s))
            add("series:" + d.label, basis_convert(expand_descriptor(d, n), Basis::Monomial) - p[n]);
    } catch (const UnsupportedError&) {
    }
    auto inv = cont ? power_in_basis(s, n) : falling_in_basis(s, n);
    Poly sum;
    for (long m = 0; m <= n; ++m) sum += p[m] * inv.coeffs[m];
    add(cont ? "series:power-inverse" : "series:falling-inverse",
        sum - basis_convert(Poly::unit(n, cont ? Basis::Monomial : Basis::FallingFactorial), Basis::Monomial));
    return out;
}

int verify(const std::string& fam, long n_max, const std::string& relations, const std::string& format) {
    auto s = parse_family(fam);
    std::vector<std::string> rels = relations.empty() ? all_relations() : split(relations);
    for (const auto& r : rels)
        if (std::find(all_relations().begin(), all_relations().end(), r) == all_relations().end())
            throw UsageError("unknown relation '" + r + "'");
    auto want = [&](const std::string& r) { return std::find(rels.begin(), rels.end(), r) != rels.end(); };

    StructureReport rep;
    auto structure = verify_structure(s, n_max + 1);
    for (const auto& e : structure.entries)
        if (want(e.relation)) rep.entries.push_back(e);
    auto p = generate(s, n_max);
    if (want("series") || want("oracle")) {
        auto per_n = parallel_map<std::vector<ResidualEntry>>(n_max + 1, [&](long n) {
            std::vector<ResidualEntry> out;
            if (want("oracle")) {
                auto r = oracle_polynomial(s, n) - p[n];
                out.push_back({"oracle", n, r.is_zero() ? "0" : to_string(r), r.is_zero()});
            }
            if (want("series"))
                for (auto& e : series_checks(s, p, n)) out.push_back(std::move(e));
            return out;
        });
        for (auto& v : per_n)
            for (auto& e : v) rep.entries.push_back(std::move(e));
    }
    for (const auto& e : rep.entries) rep.ok = rep.ok && e.pass;

    if (format == "json") {
        std::cout << structure_report_to_json(rep).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "relation,n,pass,residual\n";
        for (const auto& e : rep.entries)
            std::cout << csv_field(e.relation) << "," << e.n << "," << (e.pass ? "true" : "false") << ","
                      << csv_field(e.residual) << "\n";
    } else {
        long fails = 0;
        for (const auto& e : rep.entries)
            if (!e.pass) {
                ++fails;
                std::cout << "FAIL " << e.relation << " n=" << e.n << ": " << e.residual << "\n";
            }
        std::cout << rep.entries.size() << " identities checked, " << fails << " nonzero residuals\n";
    }
    return rep.ok ? 0 : kVerifyFailed;
}

int repr(const std::string& fam, std::optional<long> n, const std::string& format) {
    auto s = parse_family(fam);
    std::vector<Descriptor<R>> ds;
    try {
        ds = closed_forms(s);
    } catch (const UnsupportedError&) {
    }
    const bool cont = s.kind == Kind::Continuous;
    std::optional<SeriesCoefficients<R>> fwd, inv;
    if (n) {
        fwd = cont ? power_coeffs(s, *n) : falling_coeffs(s, *n);
        inv = cont ? power_in_basis(s, *n) : falling_in_basis(s, *n);
    }
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& d : ds) arr.push_back(descriptor_to_json(d));
        Json out{{"family", family_to_json(s)}, {"representations", arr}};
        if (n) {
            out["basis"] = cont ? "monomial" : "falling";
            out["forward"] = row_to_json({*n, fwd->coeffs});
            out["inverse"] = row_to_json({*n, inv->coeffs});
        }
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "label,upper,lower,argument,scale,offset,prefactor\n";
        for (const auto& d : ds) {
            auto j = descriptor_to_json(d);
            std::string up, lo;
            for (const auto& u : j["upper"]) up += (up.empty() ? "" : ";") + u.get<std::string>();
            for (const auto& l : j["lower"]) lo += (lo.empty() ? "" : ";") + l.get<std::string>();
            std::cout << csv_field(d.label) << "," << csv_field(up) << "," << csv_field(lo) << ","
                      << arg_kind_name(d.argument.kind) << "," << d.argument.scale.to_string() << ","
                      << d.argument.offset.to_string() << "," << csv_field(prefactor_string(d)) << "\n";
        }
    } else {
        for (const auto& d : ds) {
            auto j = descriptor_to_json(d);
            std::cout << d.label << ": " << prefactor_string(d) << " * F(" << j["upper"].dump() << "; "
                      << j["lower"].dump() << "; " << j["argument"].dump() << ")\n";
        }
        if (n) {
            std::cout << (cont ? "power" : "falling") << " coefficients of p_" << *n << ": "
                      << to_string(fwd->polynomial()) << "\n";
            for (long m = 0; m <= *n; ++m)
                std::cout << (cont ? "x^" : "x_(") << *n << (cont ? "" : ")") << " coefficient of p_" << m << ": "
                          << inv->coeffs[m].to_string() << "\n";
        }
    }
    return 0;
}

int connect(const std::string& from, const std::string& to, long n, const std::string& method,
            const std::string& format) {
    auto P = parse_family(from), Q = parse_family(to);
    if (P.kind != Q.kind) throw UsageError("--from and --to must both be continuous or both discrete");
    auto cls = classify(P, Q, n);
    ConnectionRow<R> row;
    if (method == "oracle" || (method == "auto" && cls.compat == Compat::General)) {
        row = connect_oracle(P, Q, n);
    } else {
        if (cls.compat == Compat::General) throw UsageError("no connection recurrence for this pair; use --method oracle");
        row = connect_recurrence(cls);
    }
    print_row(row, format, "C");
    return 0;
}

int param_deriv(const std::string& fam, const std::string& param, long n, const std::string& method,
                const std::string& format) {
    auto s = parse_family(fam);
    std::map<std::string, R> params(s.params.begin(), s.params.end());
    if (!params.count(param)) throw UsageError("family '" + s.name + "' has no parameter '" + param + "'");
    const ParameterDerivative* formula = nullptr;
    for (const auto& pd : parameter_derivatives())
        if (pd.family == s.name && pd.param == param) formula = &pd;
    ConnectionRow<R> row;
    if (method == "oracle" || (method == "auto" && !formula)) {
        row = parameter_derivative_oracle(s.name, param, params, n);
    } else {
        if (!formula) throw UsageError("no closed formula for d/d" + param + " of " + s.name + "; use --method oracle");
        std::map<std::string, R> fp;
        for (const auto& k : formula->params) fp[k] = params.at(k);
        row = parameter_derivative(formula->name, fp, n);
    }
    print_row(row, format, "D");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure relations, representations and connection coefficients of classical orthogonal "
                 "polynomial families"};
    app.require_subcommand(1);
    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    };
    auto nonneg = CLI::NonNegativeNumber;

    std::string family, what = "recurrence", relations, from, to, param, method = "auto";
    long n_max = 0, n = 0;

    auto* tab = app.add_subcommand("tabulate", "coefficient table of one structure relation");
    tab->add_option("--family", family, "family spec, name[:key=p/q,...] or raw:...")->required();
    tab->add_option("--what", what, "relation")
        ->check(CLI::IsMember({"recurrence", "derivative", "delta", "starred", "primed", "hatted"}));
    tab->add_option("--n-max", n_max, "largest n")->required()->check(nonneg);
    add_format(tab);

    auto* gen = app.add_subcommand("generate", "polynomials p_0..p_{n-max} in the monomial basis");
    gen->add_option("--family", family, "family spec")->required();
    gen->add_option("--n-max", n_max, "largest degree")->required()->check(nonneg);
    add_format(gen);

    auto* ver = app.add_subcommand("verify", "exact residuals of the identity suite");
    ver->add_option("--family", family, "family spec")->required();
    ver->add_option("--n-max", n_max, "largest n")->required()->check(nonneg);
    ver->add_option("--relations", relations,
                    "comma list of equation,recurrence,derivative,delta,starred,primed,hatted,series,oracle");
    add_format(ver);

    std::optional<long> repr_n;
    auto* rep = app.add_subcommand("repr", "hypergeometric descriptors and power or falling expansions");
    rep->add_option("--family", family, "family spec")->required();
    rep->add_option("--n", repr_n, "degree for the forward and inverse expansions")->check(nonneg);
    add_format(rep);

    auto* con = app.add_subcommand("connect", "connection coefficients p_n = sum C_m q_m");
    con->add_option("--from", from, "family of p")->required();
    con->add_option("--to", to, "family of q")->required();
    con->add_option("--n", n, "degree")->required()->check(nonneg);
    con->add_option("--method", method, "auto, recurrence or oracle")
        ->check(CLI::IsMember({"auto", "recurrence", "oracle"}));
    add_format(con);

    auto* pd = app.add_subcommand("param-deriv", "d/d(param) p_n = sum D_m p_m");
    pd->add_option("--family", family, "family spec")->required();
    pd->add_option("--param", param, "parameter name")->required();
    pd->add_option("--n", n, "degree")->required()->check(nonneg);
    pd->add_option("--method", method, "auto, formula or oracle")->check(CLI::IsMember({"auto", "formula", "oracle"}));
    add_format(pd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        thread_count();
        if (tab->parsed()) return tabulate(family, what, n_max, format);
        if (gen->parsed()) return generate_cmd(family, n_max, format);
        if (ver->parsed()) return verify(family, n_max, relations, format);
        if (rep->parsed()) return repr(family, repr_n, format);
        if (con->parsed()) return connect(from, to, n, method, format);
        if (pd->parsed()) return param_deriv(family, param, n, method, format);
    } catch (const AdmissibilityError& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return kInadmissible;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return kInadmissible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
