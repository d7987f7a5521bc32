#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stringy/invariants.hpp"
#include "stringy/koszul.hpp"
#include "stringy/lattice.hpp"
#include "stringy/polynomial.hpp"
#include "stringy/semigroup.hpp"

namespace stringy {

using Json = nlohmann::ordered_json;

/// Throws ParseError naming the line and column of a syntax error.
Json parse_json_text(const std::string& text);
/// Compact, deterministic rendering.
std::string dump(const Json& j);

// Readers throw ParseError naming the offending field, e.g. "vertices[2][0]".

LatticePolytope polytope_from_json(const Json& j);
Json to_json(const LatticePolytope& p);
/// Coordinates are integers when integral, "a/b" strings otherwise.
Json to_json(const RationalPolytope& p);

Fan fan_from_json(const Json& j);
Json to_json(const Fan& fan);

std::vector<std::int64_t> heights_from_json(const Json& j);
Json heights_to_json(const std::vector<std::int64_t>& heights);

Json to_json(const UnivariatePolynomial& p, const std::string& var = "t");
UnivariatePolynomial univariate_from_json(const Json& j);
Json to_json(const BivariateLaurentPolynomial& p);
BivariateLaurentPolynomial bivariate_from_json(const Json& j);

Json to_json(const HodgeTable& t);
HodgeTable hodge_table_from_json(const Json& j);

Json to_json(const GradedQuotientReport& r);
GradedQuotientReport quotient_report_from_json(const Json& j);

Json to_json(const KoszulComparison& r);
KoszulComparison koszul_comparison_from_json(const Json& j);

Json to_json(const FanSubdivision& s);
Json to_json(const FaceLattice& lattice);
Json to_json(const BoxPointTable& t);
Json to_json(const RegularityVerdict& v);

/// "rational", "prime" (default prime) or "prime:<p>". Throws ParseError.
FieldSpec field_from_string(std::string_view text);

}  // namespace stringy
