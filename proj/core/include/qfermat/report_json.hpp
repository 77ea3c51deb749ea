#pragma once

// JSON renderings of every report. Key order is fixed (ordered_json) so that
// dumps are byte-for-byte reproducible.

#include <nlohmann/json.hpp>

#include "qfermat/census.hpp"
#include "qfermat/cyclo.hpp"
#include "qfermat/hilb1.hpp"
#include "qfermat/koszul.hpp"
#include "qfermat/skew_poly.hpp"

namespace qfermat {

using Json = nlohmann::ordered_json;

/// {"conductor": m, "coords": ["p/q", ...]}
Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

Json to_json(const DiagAutomorphism& phi);
Json face_to_json(Face face);  // 1-based member list

/// {is_cy, column_sums, common_value, serre_scalars, twist_vector?}
Json to_json(const CyReport& report, const std::optional<std::vector<int>>& twist = std::nullopt);
Json to_json(const FrobeniusComparison& cmp);
Json to_json(const PatchParams& patch);
Json to_json(const FaceComplex& complex);
Json to_json(const Hilb1Report& report);
Json to_json(const CensusReport& report);

}  // namespace qfermat
