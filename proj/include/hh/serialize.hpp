#pragma once

#include <json.hpp>

#include "hh/gauss_poly.hpp"

namespace hh {

using ojson = nlohmann::ordered_json;

// PiScalar <-> [{"pi": e, "re": "p/q", "im": "p/q"}, ...], ascending e.
ojson pi_scalar_to_json(const PiScalar& s);
PiScalar pi_scalar_from_json(const nlohmann::json& j);

// GaussPoly <-> {"n":, "lambda":, "t":, "terms":[{"a":[],"b":[],"coeff":...}]}
// with terms in graded-lexicographic order on (|a|+|b|, a, b).
ojson gauss_poly_to_json(const GaussPoly& f);
GaussPoly gauss_poly_from_json(const nlohmann::json& j);

} // namespace hh
