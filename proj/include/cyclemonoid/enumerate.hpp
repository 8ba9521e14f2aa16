#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclemonoid/cache.hpp"
#include "cyclemonoid/realize.hpp"

namespace cyclemonoid {

// All unlabelled simple graphs (connected ones, trees) on n vertices, built
// by single-vertex extension with canonical-form deduplication; output in
// canonical graph6 order. These reproduce the standard published lists.
std::vector<SimpleGraph> generate_all_graphs(int n);
std::vector<SimpleGraph> generate_connected_graphs(int n);
std::vector<SimpleGraph> generate_trees(int n);

bool is_connected(const SimpleGraph& h);
std::vector<SimpleGraph> connected_components(const SimpleGraph& h);

// Component-wise realizability: realizable iff every component is, with the
// disjoint union of the witnesses; one unrealizable component settles it.
RealizabilityVerdict realize_components(const SimpleGraph& h, const RealizeBudgets& budgets = {});

struct EnumerationReport {
  int n = 0;
  std::int64_t graphs_seen = 0;
  std::int64_t realizable = 0;
  std::int64_t unrealizable = 0;
  std::int64_t undecided = 0;
  std::map<std::string, std::int64_t> by_reason;
  std::int64_t wall_millis = 0;
  std::int64_t cache_hits = 0;
};

struct EnumerateOptions {
  RealizeBudgets budgets;
  int threads = 1;
  std::string cache_path;  // empty = no persistent cache
  // Re-verify this fraction of cache hits against a fresh computation.
  int audit_every = 100;
};

// Classify every graph6 line; totals are independent of thread interleaving
// (workers only ever write disjoint slots, the cache is fed by one thread).
EnumerationReport enumerate_corpus(const std::vector<std::string>& graph6_lines, int n,
                                   const EnumerateOptions& opts);

std::string report_table(const std::vector<EnumerationReport>& reports);
Json report_json(const EnumerationReport& report);

}  // namespace cyclemonoid
