#pragma once

// JSON forms for polynomials: a MultiPoly is a list of
// {"exponents": [...], "coefficient": "<field element>"} objects in
// graded-lex order; a LaurentPoly is a list of [t-exponent, "<coefficient
// polynomial>"] pairs in ascending exponent order.

#include "hessk3/poly.hpp"

#include "json.hpp"

namespace hessk3 {

nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const CoeffField& field, const std::vector<std::string>& vars,
                         const nlohmann::json& j);

nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const CoeffField& field,
                              const std::vector<std::string>& params,
                              const nlohmann::json& j);

}  // namespace hessk3
