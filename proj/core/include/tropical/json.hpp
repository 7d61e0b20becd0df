#pragma once

#include <nlohmann/json.hpp>

#include "tropical/factorization.hpp"
#include "tropical/polynomial.hpp"

namespace tropical {

// {"low_degree": r, "coeffs": ["6", "4", "0"]}, coefficients from a_r up,
// scalars as exact strings ("inf" allowed in the interior).
nlohmann::json to_json(const TropPoly& f);
TropPoly poly_from_json(const nlohmann::json& j);

// {"leading": "0", "monomial_degree": 0, "roots": ["3", "3"]}
nlohmann::json to_json(const Factorization& fac);
Factorization factorization_from_json(const nlohmann::json& j);

}  // namespace tropical
