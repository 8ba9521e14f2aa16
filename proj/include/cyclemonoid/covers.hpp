#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclemonoid/graph.hpp"

namespace cyclemonoid {

// An ordered antichain of cliques covering every vertex and edge of H.
// Cliques contained in another cover clique are excluded: a cover using one
// maps to a smaller cover realizing the same graph, so nothing is lost.
struct CliqueCover {
  std::vector<VertexSet> cliques;

  bool valid_for(const SimpleGraph& h) const;
};

struct CoverEnumerationResult {
  std::int64_t emitted = 0;
  bool exhausted = false;  // false when the budget cut the stream short
};

// Streams every antichain clique cover of h with at most size_cap cliques,
// smaller covers first. Within a size the order is deterministic: the search
// always branches on the lexicographically first uncovered vertex or edge,
// candidate cliques ordered by descending size then ascending mask, and a
// cover set is produced exactly once (explored candidates are banned for
// later siblings). Once everything is covered the cover may still be padded
// with further antichain-compatible cliques up to the target size, since a
// cover whose system is solvable need not be irredundant.
//
// The callback returns false to stop the stream (budget or early success).
CoverEnumerationResult enumerate_clique_covers(const SimpleGraph& h, int size_cap,
                                               const std::function<bool(const CliqueCover&)>& emit);

// Smallest number of cliques needed to cover all vertices and edges of h.
int minimum_clique_cover_size(const SimpleGraph& h);

}  // namespace cyclemonoid
