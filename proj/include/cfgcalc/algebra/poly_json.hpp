#pragma once

#include <json.hpp>

#include "cfgcalc/algebra/multipoly.hpp"

namespace cfgcalc::algebra {

/// {"letters":[...],"terms":[{"coeff":"<decimal>","exps":[...]}]}, terms in
/// canonical order. Coefficients are strings so they survive any JSON reader.
nlohmann::json to_json(const MultiPoly& p);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
MultiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json_array(const std::vector<BigInt>& values);

}  // namespace cfgcalc::algebra
