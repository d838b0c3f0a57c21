#pragma once

#include "opoly/connection.hpp"
#include "opoly/diagnostics.hpp"
#include "opoly/series.hpp"
#include "opoly/structure.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opoly {

using Json = nlohmann::ordered_json;

// Malformed input: bad grammar, malformed rational, unknown family or key,
// missing parameter.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// `name[:key=p/q,...]` or `raw:kind=...,a=...,b=...,c=...,d=...,e=...[,k=monic]`.
// Well-formed input whose parameters are degenerate (d = 0, k_n = 0) raises
// AdmissibilityError.
FamilySpec<Rational> parse_family(const std::string& s);

// Family file format: {"kind","a".."e","k","params"}, optionally with
// "name" naming a catalog family, in which case "params" feed the catalog.
Json family_to_json(const FamilySpec<Rational>& s);
FamilySpec<Rational> family_from_json(const Json& j);

struct CoefficientTable {
    std::string relation;
    std::vector<std::pair<long, Triple<Rational>>> entries;
};

Json table_to_json(const CoefficientTable& t);
CoefficientTable table_from_json(const Json& j);

Json row_to_json(const ConnectionRow<Rational>& r);
ConnectionRow<Rational> row_from_json(const Json& j);

Json descriptor_to_json(const Descriptor<Rational>& d);

Json structure_report_to_json(const StructureReport& r);
Json diagnostics_to_json(const TranscriptionReport& t, const std::vector<MisprintCheck>& misprints);

// Schema checks used by the round-trip tests; they throw ParseError.
void validate_table_json(const Json& j);
void validate_row_json(const Json& j);
void validate_descriptor_json(const Json& j);

}  // namespace opoly
