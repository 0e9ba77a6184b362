#include "hessk3/moduli_json.hpp"

#include "hessk3/poly_json.hpp"

#include <stdexcept>

namespace hessk3 {

nlohmann::json weighted_point_to_json(const WeightedPoint& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& c : p.coords()) a.push_back(to_string(c));
  return a;
}

nlohmann::json divisor_flags_to_json(const DivisorFlags& f) {
  return {{"boundary", f.boundary},
          {"kummer", f.kummer},
          {"non_sylvester", f.non_sylvester},
          {"ns2_locus", f.ns2_locus},
          {"cyclic_locus", f.cyclic_locus},
          {"fermat_point", f.fermat_point},
          {"g_locus", f.g_locus}};
}

nlohmann::json invariant_report_json(const WeightedPoint& invariant_point) {
  nlohmann::json j;
  j["point"] = weighted_point_to_json(invariant_point);
  j["flags"] = divisor_flags_to_json(divisor_membership(invariant_point));
  for (const CatalogEntry& e : catalog()) {
    if (e.point && wps_equal(*e.point, invariant_point)) {
      j["catalog_name"] = e.name;
      break;
    }
  }
  return j;
}

nlohmann::json family_to_json(const FamilySpec& fam) {
  nlohmann::json j;
  j["params"] = fam.params();
  nlohmann::json l = nlohmann::json::array();
  for (const LaurentPoly& li : fam.lambda()) l.push_back(laurent_to_json(li));
  j["lambda"] = l;
  return j;
}

FamilySpec family_from_json(const nlohmann::json& j) {
  std::vector<std::string> params;
  if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
  const nlohmann::json& l = j.at("lambda");
  if (!l.is_array() || l.size() != 5)
    throw std::invalid_argument("family JSON: \"lambda\" must list five entries");
  CoeffField q = CoeffField::rationals();
  std::array<LaurentPoly, 5> lambda{
      LaurentPoly::zero(q, params), LaurentPoly::zero(q, params),
      LaurentPoly::zero(q, params), LaurentPoly::zero(q, params),
      LaurentPoly::zero(q, params)};
  for (int i = 0; i < 5; ++i) lambda[i] = laurent_from_json(q, params, l[i]);
  return FamilySpec(std::move(lambda));
}

}  // namespace hessk3
