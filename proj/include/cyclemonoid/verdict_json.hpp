#pragma once

#include <string>

#include <json.hpp>

#include "cyclemonoid/realize.hpp"

namespace cyclemonoid {

using Json = nlohmann::json;

Json multidigraph_to_json(const MultiDigraph& g);
MultiDigraph multidigraph_from_json(const Json& j);

Json catalog_to_json(const CycleCatalog& c);
Json phi_to_json(const PhiResult& p, bool include_labels);

// Verdict record: {graph6, canonical, verdict, reason | witness{n, adj},
// cover, solution, stats{covers_tried, solver_nodes, millis}}.
Json verdict_to_json(const std::string& graph6, const std::string& canonical,
                     const RealizabilityVerdict& verdict);

// Stable content key: FNV-1a 64 over the record serialized without its
// checksum field, hex encoded.
std::string record_checksum(const Json& record);

}  // namespace cyclemonoid
