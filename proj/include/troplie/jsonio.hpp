#pragma once

#include "troplie/groups.hpp"
#include "troplie/networks.hpp"
#include "troplie/tropical.hpp"

#include <json.hpp>

namespace troplie {

using Json = nlohmann::json;

/// "p/q" with the "/q" omitted for integers; parse accepts both forms.
std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

Json coeff_to_json(const GaussianRational& c);
GaussianRational coeff_from_json(const Json& j);

/// Bracket-spec document: {"variables": [{"name", "kind": "real"|"complex"}],
/// "brackets": [{"lhs", "rhs", "poly": [{"coeff": {"re","im"},
/// "exponents": {name: int}}]}]}. Conjugates are referenced as "~name";
/// unspecified pairs default to the zero bracket.
Json spec_to_json(const PoissonStructure& P);
PoissonStructure spec_from_json(const Json& j);

/// {"dimension", "coordinates": [names], "normals": [[int, ...], ...]}.
Json cone_to_json(const StrictCone& c);
StrictCone cone_from_json(const Json& j);

/// {"coordinates": [names], "matrix": [["p/q", ...], ...]}.
Json bracket_to_json(const ConstantBracket& cb);
std::pair<std::vector<std::string>, std::vector<std::vector<Rational>>> bracket_from_json(
    const Json& j);

/// Network document: {"ports", "vertices", "sources", "sinks",
/// "edges": [{"from", "to", "weight": name-or-null}], optional
/// "weights": {name: "p/q"}}. Weight names are sorted; without a "weights"
/// object the weighting is symbolic (one real variable per name).
std::pair<PlanarNetwork, Weighting> network_from_json(const Json& j);

Json report_to_json(const VerifyGZReport& rep);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace troplie
