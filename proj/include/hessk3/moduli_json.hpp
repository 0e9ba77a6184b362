#pragma once

// JSON forms of the moduli types used by the command-line tool: weighted
// points, divisor flags (with an optional catalog match), and family specs.

#include "hessk3/moduli.hpp"

#include "json.hpp"

namespace hessk3 {

// ["a", "b", "c", "d", "e"] with rational coordinate strings.
nlohmann::json weighted_point_to_json(const WeightedPoint& p);

// Object with one boolean per named divisor.
nlohmann::json divisor_flags_to_json(const DivisorFlags& f);

// {"point": [...], "flags": {...}, "catalog_name": "..."} — the catalog name
// is present only when the point matches a catalog entry under wps_equal.
nlohmann::json invariant_report_json(const WeightedPoint& invariant_point);

// {"params": [...], "lambda": [five Laurent term arrays [[exponent,
// "coefficient"], ...]]} over Q.
nlohmann::json family_to_json(const FamilySpec& fam);
FamilySpec family_from_json(const nlohmann::json& j);

}  // namespace hessk3
