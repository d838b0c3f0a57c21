#include "opoly/io.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace opoly {

namespace {

using R = Rational;

R rational_arg(const std::string& key, const std::string& v) {
    try {
        return R::parse(v);
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + v + "' for '" + key + "' (use p/q)");
    }
}

R rational_field(const Json& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError("missing field '" + key + "'");
    if (!j.at(key).is_string()) throw ParseError("field '" + key + "' must be a \"p/q\" string");
    return rational_arg(key, j.at(key).get<std::string>());
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Kind kind_arg(const std::string& v) {
    if (v == "continuous") return Kind::Continuous;
    if (v == "discrete") return Kind::Discrete;
    throw ParseError("kind must be continuous or discrete, got '" + v + "'");
}

FamilySpec<R> raw_checked(Kind kind, const R& a, const R& b, const R& c, const R& d, const R& e) {
    if (d.is_zero()) throw AdmissibilityError("raw family: d = 0 leaves tau constant");
    return raw_family<R>(kind, a, b, c, d, e);
}

FamilySpec<R> catalog_checked(const std::string& name, const std::map<std::string, R>& params) {
    std::string base = name;
    const std::string suffix = "-monic";
    if (base.size() > suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0)
        base.resize(base.size() - suffix.size());
    const CatalogEntry* entry = nullptr;
    for (const auto& e : catalog_entries())
        if (e.name == base) entry = &e;
    if (!entry) throw ParseError("unknown family '" + name + "'");
    for (const auto& [k, v] : params)
        if (std::find(entry->params.begin(), entry->params.end(), k) == entry->params.end())
            throw ParseError("family '" + base + "' has no parameter '" + k + "'");
    for (const auto& k : entry->params)
        if (!params.count(k)) throw ParseError("family '" + base + "' needs parameter '" + k + "'");
    try {
        return catalog<R>(name, params);
    } catch (const std::invalid_argument& e) {
        // names and keys are valid here, so this is a degenerate point
        throw AdmissibilityError(e.what());
    }
}

Json triple_entry(long n, const Triple<R>& t) {
    return Json{{"n", n}, {"lo", t.lo.to_string()}, {"mid", t.mid.to_string()}, {"hi", t.hi.to_string()}};
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ParseError("schema: " + what);
}

bool is_rational_string(const Json& j) {
    if (!j.is_string()) return false;
    try {
        R::parse(j.get<std::string>());
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

FamilySpec<Rational> parse_family(const std::string& s) {
    auto colon = s.find(':');
    std::string name = trim(s.substr(0, colon));
    if (name.empty()) throw ParseError("empty family name");
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::string rest = s.substr(colon + 1);
        size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            auto eq = item.find('=');
            if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'");
            std::string k = trim(item.substr(0, eq)), v = trim(item.substr(eq + 1));
            if (k.empty() || v.empty()) throw ParseError("expected key=value, got '" + item + "'");
            if (!kv.emplace(k, v).second) throw ParseError("repeated key '" + k + "'");
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (name == "raw") {
        static const std::set<std::string> keys{"kind", "a", "b", "c", "d", "e", "k"};
        for (const auto& [k, v] : kv)
            if (!keys.count(k)) throw ParseError("raw family has no key '" + k + "'");
        for (const char* k : {"kind", "a", "b", "c", "d", "e"})
            if (!kv.count(k)) throw ParseError(std::string("raw family needs '") + k + "'");
        if (kv.count("k") && kv["k"] != "monic") throw ParseError("raw family supports k=monic only");
        return raw_checked(kind_arg(kv["kind"]), rational_arg("a", kv["a"]), rational_arg("b", kv["b"]),
                           rational_arg("c", kv["c"]), rational_arg("d", kv["d"]), rational_arg("e", kv["e"]));
    }
    std::map<std::string, R> params;
    for (const auto& [k, v] : kv) params[k] = rational_arg(k, v);
    return catalog_checked(name, params);
}

Json family_to_json(const FamilySpec<Rational>& s) {
    Json j;
    if (s.name != "raw") j["name"] = s.name;
    j["kind"] = kind_name(s.kind);
    j["a"] = s.a.to_string();
    j["b"] = s.b.to_string();
    j["c"] = s.c.to_string();
    j["d"] = s.d.to_string();
    j["e"] = s.e.to_string();
    j["k"] = s.leading.name;
    Json p = Json::object();
    for (const auto& [k, v] : s.params) p[k] = v.to_string();
    j["params"] = p;
    return j;
}

FamilySpec<Rational> family_from_json(const Json& j) {
    require(j.is_object(), "family must be an object");
    if (j.contains("name")) {
        require(j.at("name").is_string(), "name must be a string");
        std::map<std::string, R> params;
        if (j.contains("params")) {
            require(j.at("params").is_object(), "params must be an object");
            for (const auto& [k, v] : j.at("params").items()) params[k] = rational_field(j.at("params"), k);
        }
        auto s = catalog_checked(j.at("name").get<std::string>(), params);
        for (const char* k : {"a", "b", "c", "d", "e"})
            if (j.contains(k) && !(rational_field(j, k) == (k[0] == 'a'   ? s.a
                                                           : k[0] == 'b' ? s.b
                                                           : k[0] == 'c' ? s.c
                                                           : k[0] == 'd' ? s.d
                                                                         : s.e)))
                throw ParseError(std::string("field '") + k + "' disagrees with the catalog family");
        return s;
    }
    require(j.contains("kind") && j.at("kind").is_string(), "kind must be a string");
    if (j.contains("k")) {
        require(j.at("k").is_string(), "k must be a string");
        if (j.at("k").get<std::string>() != "monic") throw ParseError("a family without a catalog name supports k=monic only");
    }
    return raw_checked(kind_arg(j.at("kind").get<std::string>()), rational_field(j, "a"), rational_field(j, "b"),
                       rational_field(j, "c"), rational_field(j, "d"), rational_field(j, "e"));
}

Json table_to_json(const CoefficientTable& t) {
    Json entries = Json::array();
    for (const auto& [n, tr] : t.entries) entries.push_back(triple_entry(n, tr));
    return Json{{"relation", t.relation}, {"entries", entries}};
}

void validate_table_json(const Json& j) {
    require(j.is_object() && j.contains("relation") && j.contains("entries"), "table needs relation and entries");
    static const std::set<std::string> rel{"recurrence", "derivative", "starred", "primed", "hatted", "delta"};
    require(j.at("relation").is_string() && rel.count(j.at("relation").get<std::string>()), "unknown relation");
    require(j.at("entries").is_array(), "entries must be an array");
    for (const auto& e : j.at("entries")) {
        require(e.is_object() && e.size() == 4, "entry must have exactly n, lo, mid, hi");
        require(e.contains("n") && e.at("n").is_number_integer(), "entry n must be an integer");
        for (const char* k : {"lo", "mid", "hi"})
            require(e.contains(k) && is_rational_string(e.at(k)), std::string("entry ") + k + " must be p/q");
    }
}

CoefficientTable table_from_json(const Json& j) {
    validate_table_json(j);
    CoefficientTable t{j.at("relation").get<std::string>(), {}};
    for (const auto& e : j.at("entries"))
        t.entries.push_back({e.at("n").get<long>(), Triple<R>{R::parse(e.at("lo").get<std::string>()),
                                                               R::parse(e.at("mid").get<std::string>()),
                                                               R::parse(e.at("hi").get<std::string>())}});
    return t;
}

Json row_to_json(const ConnectionRow<Rational>& r) {
    Json c = Json::object();
    for (size_t m = 0; m < r.coeffs.size(); ++m) c[std::to_string(m)] = r.coeffs[m].to_string();
    return Json{{"n", r.n}, {"coeffs", c}};
}

void validate_row_json(const Json& j) {
    require(j.is_object() && j.size() == 2, "row must have exactly n and coeffs");
    require(j.contains("n") && j.at("n").is_number_integer() && j.at("n").get<long>() >= 0, "row n must be >= 0");
    require(j.contains("coeffs") && j.at("coeffs").is_object(), "coeffs must be an object");
    long n = j.at("n").get<long>();
    require(static_cast<long>(j.at("coeffs").size()) == n + 1, "coeffs must have keys 0..n");
    for (long m = 0; m <= n; ++m) {
        auto key = std::to_string(m);
        require(j.at("coeffs").contains(key) && is_rational_string(j.at("coeffs").at(key)),
                "coeffs[" + key + "] must be p/q");
    }
}

ConnectionRow<Rational> row_from_json(const Json& j) {
    validate_row_json(j);
    ConnectionRow<R> r{j.at("n").get<long>(), {}};
    for (long m = 0; m <= r.n; ++m) r.coeffs.push_back(R::parse(j.at("coeffs").at(std::to_string(m)).get<std::string>()));
    return r;
}

Json descriptor_to_json(const Descriptor<Rational>& d) {
    Json up = Json::array(), lo = Json::array();
    for (const auto& u : d.upper) up.push_back(u.str());
    if (d.minus_x) up.push_back("-x");
    for (const auto& l : d.lower) lo.push_back(l.str());
    Json arg{{"kind", arg_kind_name(d.argument.kind)},
             {"scale", d.argument.scale.to_string()},
             {"offset", d.argument.offset.to_string()}};
    if (d.argument.kind == ArgKind::Reciprocal) arg["power"] = d.argument.power;
    return Json{{"label", d.label},
                {"basis", d.minus_x ? "falling" : "monomial"},
                {"upper", up},
                {"lower", lo},
                {"argument", arg},
                {"prefactor", prefactor_string(d)}};
}

void validate_descriptor_json(const Json& j) {
    require(j.is_object(), "descriptor must be an object");
    for (const char* k : {"upper", "lower"}) {
        require(j.contains(k) && j.at(k).is_array(), std::string(k) + " must be an array");
        for (const auto& e : j.at(k)) require(e.is_string(), std::string(k) + " entries must be strings");
    }
    require(j.contains("argument") && j.at("argument").is_object(), "argument must be an object");
    const auto& a = j.at("argument");
    static const std::set<std::string> kinds{"affine", "reciprocal", "unit"};
    require(a.contains("kind") && a.at("kind").is_string() && kinds.count(a.at("kind").get<std::string>()),
            "argument kind must be affine, reciprocal or unit");
    require(a.contains("scale") && is_rational_string(a.at("scale")), "argument scale must be p/q");
    require(a.contains("offset") && is_rational_string(a.at("offset")), "argument offset must be p/q");
    require(j.contains("prefactor") && j.at("prefactor").is_string(), "prefactor must be a string");
}

Json structure_report_to_json(const StructureReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"relation", e.relation}, {"n", e.n}, {"residual", e.residual}, {"pass", e.pass}});
    return Json{{"ok", r.ok}, {"entries", entries}};
}

Json diagnostics_to_json(const TranscriptionReport& t, const std::vector<MisprintCheck>& misprints) {
    Json mm = Json::array();
    for (const auto& m : t.mismatches)
        mm.push_back(Json{{"formula", m.formula},
                          {"point", m.point},
                          {"n", m.n},
                          {"m", m.m},
                          {"transcribed", m.transcribed},
                          {"oracle", m.oracle}});
    Json mp = Json::array();
    for (const auto& c : misprints)
        mp.push_back(Json{{"id", c.id},
                          {"formula", c.formula},
                          {"change", c.change},
                          {"point", c.point},
                          {"printed", c.printed.to_string()},
                          {"corrected", c.corrected.to_string()},
                          {"printed_residual", c.printed_residual.to_string()},
                          {"corrected_residual", c.corrected_residual.to_string()},
                          {"resolved", c.resolved()}});
    return Json{{"checks", t.checks}, {"mismatches", mm}, {"misprints", mp}};
}

}  // namespace opoly
