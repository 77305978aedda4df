#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "packetmult/engine.hpp"

namespace packetmult {

using Json = nlohmann::json;

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j, int cap = order_cap());

Json field_to_json(const PAdicFieldData& field);
PAdicFieldData field_from_json(const Json& j);

/// Scenario schema (version 1): {schema, label, m, d, group (spec string or
/// table object), central_subgroup, zeta_exponent, field?}.
Json scenario_to_json(const ParameterScenario& sc);
ParameterScenario scenario_from_json(const Json& j,
                                     const std::optional<PAdicFieldData>& shared_field = {},
                                     int cap = order_cap());

/// A scenario file: {schema, field?, scenarios: [...]} with unique labels.
std::vector<ParameterScenario> scenario_file_from_json(const Json& j, int cap = order_cap());

Json report_to_json(const PacketReport& report);
PacketReport report_from_json(const Json& j);

}  // namespace packetmult
