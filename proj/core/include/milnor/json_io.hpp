#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "milnor/classify.hpp"
#include "milnor/diagram.hpp"
#include "milnor/invariants.hpp"

namespace milnor {

using Json = nlohmann::ordered_json;

/// Diagram schema (stable key names):
///   component_count, arcs_per_component, self_writhe,
///   crossings: [{over_arc, under_in, under_out, sign}],
///   paths: [[{crossing, over}]]
/// `paths` carries the full combinatorial structure; the other fields are
/// derived views and are validated on import when present.
Json diagram_to_json(const StringLinkDiagram& d);
StringLinkDiagram diagram_from_json(const Json& j);

/// List of {sequence: [ints], value: "<int>"} with arbitrary-precision
/// values serialized as strings.
Json table_to_json(const MilnorTable& t);

/// {m, n, exponents: [{pi: [ints], y: int}]} in canonical injection order.
Json form_to_json(const CanonicalForm& f);

}  // namespace milnor
