#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyclemonoid/graph.hpp"

namespace cyclemonoid {

// Simple cycles of a multidigraph grouped by vertex set: counts[W] is the
// number of simple cycles whose vertex set is exactly W, weighted by arc
// multiplicities. Two simple cycles share a vertex iff their vertex sets
// intersect, so this catalog determines the hike dependency graph without
// ever storing individual cycles.
struct CycleCatalog {
  int base_n = 0;
  std::map<VertexSet, std::int64_t> counts;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
  }
};

// Hike dependency graph together with the vertex set of the cycle each
// H-vertex stands for. Vertices are adjacent iff their labels intersect.
struct PhiResult {
  SimpleGraph h;
  std::vector<VertexSet> labels;
};

struct CycleBudgetExceeded : std::runtime_error {
  std::int64_t partial_total;
  explicit CycleBudgetExceeded(std::int64_t partial)
      : std::runtime_error("cycle budget exceeded (partial total " + std::to_string(partial) + ")"),
        partial_total(partial) {}
};

struct CycleOptions {
  std::int64_t budget = 1'000'000;  // cap on the total cycle count
  bool johnson_blocking = false;    // optional pruning for larger graphs
};

// Number of simple cycles with vertex set exactly W: the sum over cyclic
// permutations sigma of W of the product of adj[v][sigma(v)]. |W| = 1 gives
// the self-loop count.
std::int64_t cycle_count_for_set(const MultiDigraph& g, VertexSet w);

// Full catalog via depth-first search over simple paths rooted at their
// least vertex, restricted to one strongly connected component at a time.
CycleCatalog build_cycle_catalog(const MultiDigraph& g, const CycleOptions& opts = {});

// The hike dependency graph: one vertex per simple cycle (N_W vertices
// labeled W per catalog entry), edges between label-intersecting vertices.
PhiResult phi(const MultiDigraph& g, const CycleOptions& opts = {});
PhiResult phi_from_catalog(const CycleCatalog& catalog);

PhiResult phi_of_disjoint_union(const std::vector<PhiResult>& parts);

}  // namespace cyclemonoid
