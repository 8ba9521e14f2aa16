#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclemonoid/covers.hpp"
#include "cyclemonoid/cycles.hpp"
#include "cyclemonoid/diophantine.hpp"
#include "cyclemonoid/graph.hpp"

namespace cyclemonoid {

enum class UnrealizableReason {
  InducedCycleFilter,
  SevenVertexSquareFilter,
  ExhaustiveCoverSearch,
  CuratedSevenVertexTable,
};

std::string to_string(UnrealizableReason r);

struct RealizeBudgets {
  std::int64_t cycle_budget = 1'000'000;
  std::int64_t solver_node_budget = 10'000'000;  // per cover
  std::int64_t cover_budget = 100'000;           // covers tried per graph
  bool min_cover_only = false;                   // restrict to minimum-size covers
};

struct RealizeStats {
  std::int64_t covers_tried = 0;
  std::int64_t solver_nodes = 0;
  std::string budget_exhausted_at;  // empty, "cover_budget" or "solver_budget"
  std::int64_t millis = 0;
};

struct RealizabilityVerdict {
  enum class Kind { Realizable, Unrealizable, Undecided } kind;
  // Realizable only:
  MultiDigraph witness;
  CliqueCover cover;
  SolutionMatrix solution;
  // Unrealizable only:
  UnrealizableReason reason = UnrealizableReason::ExhaustiveCoverSearch;

  RealizeStats stats;
};

// Witness to a failed induced-cycle test: the vertex set of an induced cycle
// of length >= 4 admitting none of the configurations forced by phi-images.
struct InducedCycleWitness {
  VertexSet cycle;
};

// Necessary condition on every induced cycle C of length >= 4: some digraph
// cycle must thread the C-cycles forwards and another backwards, so H must
// contain two distinct vertices w1, w2 adjacent to all of C whose
// neighborhoods stay inside C and its neighborhood, and when {w1,w2} is not
// an edge, every consecutive C-pair must additionally share a neighbor other
// than w1 and w2. Fails only certified-unrealizable graphs.
std::optional<InducedCycleWitness> induced_cycle_filter(const SimpleGraph& h);

// For connected H on exactly 7 vertices containing an induced 4-cycle: only
// two such graphs are realizable (the phi-images of the two ways to add one
// self-loop to the minimal square-of-cycles digraph); anything else fails.
bool seven_vertex_square_filter_passes(const SimpleGraph& h);

// The two realizable 7-vertex graphs with an induced square, and the nine
// curated unrealizable 7-vertex graphs keyed by canonical form.
SimpleGraph allowed_seven_vertex_graph(int which);       // which in {0, 1}
const std::vector<SimpleGraph>& curated_seven_vertex_unrealizable();
bool in_curated_table(const SimpleGraph& h);

// Full decision pipeline for connected H: filters, curated table, then the
// cover-by-cover bounded search with cover sizes up to max(1, |V_H| - 1).
// Every Realizable verdict is verified by recomputing phi on the witness.
RealizabilityVerdict realize(const SimpleGraph& h, const RealizeBudgets& budgets = {});

// Direct witness for a tree: one digraph vertex per tree edge; each tree
// vertex contributes the cyclic rotation of its incident edges (ascending
// edge index), leaves becoming self-loops.
MultiDigraph realize_tree(const SimpleGraph& tree);

struct VertexEdgeBounds {
  int min_vertices;  // minimum clique cover size
  int max_vertices;  // |V_H| - 1
  int max_edges;     // 2|V_H| - 2
};
VertexEdgeBounds vertex_edge_bounds(const SimpleGraph& h);

// Dependency graph of the trace monoid T_n; K_{4+n} minus the two edges
// {a,c} and {b,d}, the extra n letters depending on everything.
SimpleGraph trace_monoid_family_graph(int n);
RealizabilityVerdict trace_monoid_family_check(int n, const RealizeBudgets& budgets = {});

}  // namespace cyclemonoid
