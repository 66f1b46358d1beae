#pragma once

// JSON views of the library's value types. Objects use insertion order so the
// emitted text is stable across runs.

#include <json.hpp>

#include "planarlab/mub.hpp"
#include "planarlab/search.hpp"

namespace planarlab {

using Json = nlohmann::ordered_json;

/// {"p":..., "r":..., "modulus":[...]}
Json field_to_json(const Field& field);
/// Rebuilds the field from p and r; a stored modulus must be the canonical one.
Field field_from_json(const nlohmann::json& j);

Json family_to_json(const FamilySpec& family);
Json witness_to_json(const Witness& w);
Json mag_sq_to_json(const MagSqResult& m);
Json mub_report_to_json(const MubReport& report);

/// With canonical set, the wall-clock field is left out so that identical
/// inputs produce identical bytes.
Json search_report_to_json(const SearchReport& report, bool canonical);

}  // namespace planarlab
