#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclemonoid/graph.hpp"

namespace cyclemonoid {

// Replayable record of the monoid-preserving surgeries applied to a digraph.
struct TransformStep {
  enum class Op { ReverseAll, Jump, CubicSplit, Glue } op;
  int vertex = -1;      // Jump
  int other_offset = -1;  // Glue: vertex offset of the second operand
};

struct TransformLog {
  std::vector<TransformStep> steps;
};

// Adjacency transpose; simple cycles map to their reversals on the same
// vertex sets, so the hike monoid is unchanged.
MultiDigraph reverse_all(const MultiDigraph& g);

// Whether v can be jumped: no self-loop, and either all out-arcs point to a
// single other vertex or all in-arcs come from a single other vertex.
bool jumpable(const MultiDigraph& g, int v);

// Remove the transit vertex v, splicing each in-arc (w,v) with each out-arc
// (v,x) into (w,x) with the product multiplicity; remaining vertices are
// relabeled densely. Throws when the preconditions fail.
MultiDigraph jump(const MultiDigraph& g, int v);

// Jump vertices of in- or out-degree one (multiplicity-counted, self-loops
// disqualify) until none remain or one vertex is left; lowest eligible index
// first. Requires a strongly connected input.
std::pair<MultiDigraph, TransformLog> reduce(const MultiDigraph& g);

// Replace every vertex by a directed chain wired so all total degrees become
// exactly 3. Requires a strongly connected input with all total degrees >= 3
// (run reduce first). Jumping the chain vertices recovers the input, so phi
// is preserved.
MultiDigraph to_cubic(const MultiDigraph& g);

// Disjoint union with v1 and v2 identified. Vertices of g1 keep their
// labels; vertices of g2 map to n1 + (dense index after removing v2).
MultiDigraph glue(const MultiDigraph& g1, int v1, const MultiDigraph& g2, int v2);

MultiDigraph replay(const MultiDigraph& start, const TransformLog& log);

}  // namespace cyclemonoid
