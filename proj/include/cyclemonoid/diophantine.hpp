#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclemonoid/covers.hpp"
#include "cyclemonoid/graph.hpp"

namespace cyclemonoid {

// The polynomial system attached to a clique cover {k_1..k_n} of H: one
// equation per nonempty W subset of [n],
//
//   sum over cyclic permutations sigma of W of prod_{v in W} m[v][sigma(v)]
//     = |K_W|,   K_W = vertices of H lying in exactly the cliques W.
//
// A nonnegative integer solution m is the adjacency matrix of a multidigraph
// realizing H. Searching entries in [0, B] with B = max_W |K_W| is
// exhaustive: every monomial is a product of distinct variables and bounded
// by its equation's target (all terms are nonnegative), so in any solution
// an entry above B only ever appears in monomials that vanish through some
// other zero factor, and zeroing that entry preserves every equation.
struct DiophantineSystem {
  int n = 0;
  std::int64_t bound = 0;                // B
  std::vector<std::int64_t> target;      // indexed by subset mask, size 1<<n

  std::int64_t target_sum() const {
    std::int64_t s = 0;
    for (std::int64_t t : target) s += t;
    return s;
  }
};

DiophantineSystem build_system(const SimpleGraph& h, const CliqueCover& cover);

using SolutionMatrix = std::vector<std::vector<std::int64_t>>;

struct SolveOutcome {
  enum class Status { Sat, Unsat, BudgetExhausted } status;
  SolutionMatrix solution;     // first solution when Sat
  std::int64_t nodes = 0;      // value assignments explored
};

struct SolveOptions {
  std::int64_t node_budget = 10'000'000;
  // When set, every solution is reported; return false to stop early. The
  // status is then Sat iff at least one solution was seen.
  std::function<bool(const SolutionMatrix&)> on_solution;
};

// Backtracking with constraint propagation. Deterministic: diagonal entries
// are forced by singleton targets, off-diagonal entries are assigned jointly
// per unordered pair {i,j} (their product is pinned by the pair target) in
// lexicographic pair order, candidate values in ascending (m_ij, m_ji)
// order, and equations are checked the moment their last pair is assigned.
SolveOutcome solve_system(const DiophantineSystem& sys, const SolveOptions& opts = {});

}  // namespace cyclemonoid
