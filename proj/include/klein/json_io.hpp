#pragma once

#include <json.hpp>
#include <vector>

#include "klein/cover.hpp"
#include "klein/doubles.hpp"
#include "klein/moduli.hpp"
#include "klein/presentation.hpp"
#include "klein/tower.hpp"

namespace klein {

using json = nlohmann::json;

json to_json(const TopType& t);
TopType top_type_from_json(const json& j);

json to_json(const Presentation& p);

/// {"index", "components", "euler_char", "orientable",
///  "boundary": [{"corners": [...]}], "cone_points", "surface_group",
///  "signature"}; "signature" is null for disconnected covers.
json to_json(const CoverReport& r);
/// Restores the fields listed above; component details are not part of the
/// schema and come back empty.
CoverReport cover_report_from_json(const json& j);

json to_json(const DoubleRecord& r);
json to_json(const TowerReport& r);
json to_json(const RealCurveType& t);

}  // namespace klein
