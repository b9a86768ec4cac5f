#pragma once

#include "chebderiv/derivative.hpp"
#include "chebderiv/polynomial.hpp"

#include <json.hpp>

namespace chebderiv {

using Json = nlohmann::ordered_json;

// Wire format:
//   {"basis": "U"|"T", "coeffs": {"<degree>": "<num>/<den>" | "<int>"}}
// with degrees listed from highest to lowest. MonomialPoly drops "basis".

Json to_json(const MonomialPoly& p);
Json to_json(const ChebExpansion& e);

/// {"basis", "s", "n_max", "columns": {"<col>": {"<row>": "<value>"}}}; every
/// column 0..n_max is present, empty ones as {}.
Json to_json(const DiffMatrix& m);

/// Both readers throw std::invalid_argument on schema violations, including
/// zero coefficients and non-canonical rationals such as "2/4" or "3/1".
MonomialPoly monomial_from_json(const Json& j);
ChebExpansion expansion_from_json(const Json& j);

}  // namespace chebderiv
