#include "cyclemonoid/verdict_json.hpp"

namespace cyclemonoid {

Json multidigraph_to_json(const MultiDigraph& g) {
  Json j;
  j["n"] = g.n;
  j["adj"] = g.adj;
  return j;
}

MultiDigraph multidigraph_from_json(const Json& j) {
  MultiDigraph g(j.at("n").get<int>());
  auto adj = j.at("adj").get<std::vector<std::vector<std::int64_t>>>();
  if (static_cast<int>(adj.size()) != g.n)
    throw std::runtime_error("multidigraph json: adjacency size mismatch");
  for (const auto& row : adj) {
    if (static_cast<int>(row.size()) != g.n)
      throw std::runtime_error("multidigraph json: adjacency row size mismatch");
    for (std::int64_t x : row)
      if (x < 0) throw std::runtime_error("multidigraph json: negative multiplicity");
  }
  g.adj = std::move(adj);
  return g;
}

Json catalog_to_json(const CycleCatalog& c) {
  Json arr = Json::array();
  for (const auto& [w, count] : c.counts) {
    Json rec;
    rec["W"] = w.members();
    rec["count"] = count;
    arr.push_back(rec);
  }
  Json j;
  j["base_n"] = c.base_n;
  j["cycles"] = arr;
  j["total"] = c.total();
  return j;
}

Json phi_to_json(const PhiResult& p, bool include_labels) {
  Json j;
  j["n"] = p.h.vertex_count();
  Json edges = Json::array();
  for (auto [u, v] : p.h.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  if (include_labels) {
    Json labels = Json::array();
    for (const VertexSet& w : p.labels) labels.push_back(w.members());
    j["labels"] = labels;
  }
  return j;
}

Json verdict_to_json(const std::string& graph6, const std::string& canonical,
                     const RealizabilityVerdict& verdict) {
  Json j;
  j["graph6"] = graph6;
  j["canonical"] = canonical;
  switch (verdict.kind) {
    case RealizabilityVerdict::Kind::Realizable: {
      j["verdict"] = "realizable";
      j["witness"] = multidigraph_to_json(verdict.witness);
      Json cover = Json::array();
      for (const VertexSet& k : verdict.cover.cliques) cover.push_back(k.members());
      j["cover"] = cover;
      j["solution"] = verdict.solution;
      break;
    }
    case RealizabilityVerdict::Kind::Unrealizable:
      j["verdict"] = "unrealizable";
      j["reason"] = to_string(verdict.reason);
      break;
    case RealizabilityVerdict::Kind::Undecided:
      j["verdict"] = "undecided";
      j["budget_exhausted_at"] = verdict.stats.budget_exhausted_at;
      break;
  }
  j["stats"] = {{"covers_tried", verdict.stats.covers_tried},
                {"solver_nodes", verdict.stats.solver_nodes},
                {"millis", verdict.stats.millis}};
  return j;
}

std::string record_checksum(const Json& record) {
  Json copy = record;
  copy.erase("checksum");
  std::string s = copy.dump();
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace cyclemonoid
