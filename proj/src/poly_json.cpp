#include "hessk3/poly_json.hpp"

#include <stdexcept>

namespace hessk3 {

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({{"exponents", e}, {"coefficient", p.field().to_string(c)}});
  return out;
}

MultiPoly poly_from_json(const CoeffField& field, const std::vector<std::string>& vars,
                         const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("poly_from_json: expected a list of terms");
  MultiPoly out = MultiPoly::zero(field, vars);
  for (const auto& term : j) {
    std::vector<int> exponents = term.at("exponents").get<std::vector<int>>();
    out.add_term(std::move(exponents),
                 field.parse(term.at("coefficient").get<std::string>()));
  }
  return out;
}

nlohmann::json laurent_to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({k, c.to_string()});
  return out;
}

LaurentPoly laurent_from_json(const CoeffField& field,
                              const std::vector<std::string>& params,
                              const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("laurent_from_json: expected a list of [exponent, coefficient] pairs");
  LaurentPoly out = LaurentPoly::zero(field, params);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw std::invalid_argument("laurent_from_json: each term must be [exponent, coefficient]");
    out = out + LaurentPoly::term(
                    MultiPoly::parse(field, params, term.at(1).get<std::string>()),
                    term.at(0).get<long>());
  }
  return out;
}

}  // namespace hessk3
