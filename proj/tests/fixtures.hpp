#pragma once

// Shared graphs and independent oracles for the test suites. Everything here
// is deliberately brute force; the point is to check the real implementations
// against a second route.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "cyclemonoid/cycles.hpp"
#include "cyclemonoid/graph.hpp"

namespace fixtures {

using namespace cyclemonoid;

// Square with both arcs on every edge; its six simple cycles are the four
// backtracks plus the two directed 4-cycles.
inline MultiDigraph bidirected_square() { return bidirected(cycle_graph(4)); }

// 6-vertex graph: induced square 0-1-2-3 plus two vertices joined to the
// square and to each other.
inline SimpleGraph square_plus_two_apexes() {
  SimpleGraph h(6);
  for (int i = 0; i < 4; ++i) h.add_edge(i, (i + 1) % 4);
  for (int a = 4; a <= 5; ++a)
    for (int i = 0; i < 4; ++i) h.add_edge(a, i);
  h.add_edge(4, 5);
  return h;
}

// Central triangle with a pendant triangle on each side.
inline SimpleGraph triforce() {
  SimpleGraph h(6);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(2, 0);
  h.add_edge(0, 3);
  h.add_edge(3, 1);
  h.add_edge(1, 4);
  h.add_edge(4, 2);
  h.add_edge(2, 5);
  h.add_edge(5, 0);
  return h;
}

// 5-vertex worked example: a and b adjacent to everything and each other,
// c/d/e pairwise nonadjacent.
inline SimpleGraph five_vertex_example() {
  SimpleGraph h(5);  // a=0 b=1 c=2 d=3 e=4
  h.add_edge(0, 1);
  for (int v = 2; v <= 4; ++v) {
    h.add_edge(0, v);
    h.add_edge(1, v);
  }
  return h;
}

// 8-vertex worked example: hexagon a..f with the alternating chords b-d,
// d-f, f-b and two dominating vertices g, h.
inline SimpleGraph eight_vertex_example() {
  SimpleGraph h(8);  // a..f = 0..5, g=6, h=7
  for (int i = 0; i < 6; ++i) h.add_edge(i, (i + 1) % 6);
  h.add_edge(1, 3);
  h.add_edge(3, 5);
  h.add_edge(5, 1);
  for (int u = 6; u <= 7; ++u)
    for (int v = 0; v < 6; ++v) h.add_edge(u, v);
  h.add_edge(6, 7);
  return h;
}

// Bidirected square with every arc subdivided by a transit vertex: 4 core
// vertices (0..3) plus 8 transit vertices (4..11).
inline MultiDigraph subdivided_bidirected_square() {
  MultiDigraph g(12);
  for (int i = 0; i < 4; ++i) {
    int fwd = 4 + 2 * i;      // subdivides i -> i+1
    int back = 4 + 2 * i + 1;  // subdivides i+1 -> i
    int j = (i + 1) % 4;
    g.add_arc(i, fwd);
    g.add_arc(fwd, j);
    g.add_arc(j, back);
    g.add_arc(back, i);
  }
  return g;
}

// Walk generating function example, first graph: a=0, b=1 (marked), c=2,
// d=3; cycles are two self-loops, two backtracks and one triangle.
inline MultiDigraph walk_example_g() {
  MultiDigraph g(4);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  g.add_arc(1, 2);
  g.add_arc(2, 0);
  g.add_arc(2, 3);
  g.add_arc(3, 2);
  g.add_arc(3, 3);
  g.add_arc(1, 1);
  return g;
}

// Second graph of the same example: a=0..d=3, e=4 (marked, two self-loops);
// cycles are two self-loops, two backtracks and one 4-cycle.
inline MultiDigraph walk_example_g_prime() {
  MultiDigraph g(5);
  g.add_arc(0, 4);
  g.add_arc(4, 0);
  g.add_arc(2, 1);
  g.add_arc(1, 2);
  g.add_arc(1, 0);
  g.add_arc(0, 3);
  g.add_arc(3, 2);
  g.add_arc(4, 4, 2);
  return g;
}

// Cospectral pair related by a length-preserving monoid isomorphism.
inline MultiDigraph cospectral_g1() {
  MultiDigraph g(8);
  g.add_arc(1, 4);
  g.add_arc(4, 2);
  g.add_arc(2, 1);
  g.add_arc(1, 5);
  g.add_arc(5, 2);
  g.add_arc(6, 2);
  g.add_arc(3, 6);
  g.add_arc(4, 4);
  g.add_arc(5, 5);
  g.add_arc(6, 7);
  g.add_arc(7, 6);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  g.add_arc(1, 3);
  return g;
}

inline MultiDigraph cospectral_g2() {
  MultiDigraph g(8);
  g.add_arc(0, 2);
  g.add_arc(2, 1);
  g.add_arc(3, 4);
  g.add_arc(4, 0);
  g.add_arc(7, 0);
  g.add_arc(0, 5);
  g.add_arc(6, 7);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  g.add_arc(0, 3);
  g.add_arc(5, 6);
  g.add_arc(6, 5);
  g.add_arc(4, 4);
  g.add_arc(2, 2);
  return g;
}

// --- independent oracles -------------------------------------------------

// Rooted-walk brute force: enumerate every walk of length <= |W| from the
// least vertex of W without simplicity pruning, keep the simple closed ones
// whose vertex set is exactly W and whose least vertex is the root, and sum
// arc-multiplicity products. Each simple cycle has a unique such rooted
// representative, so this recounts N_W.
inline std::int64_t brute_force_cycle_count(const MultiDigraph& g, VertexSet w) {
  if (w.count() == 1) return g.adj[w.lowest()][w.lowest()];
  int root = w.lowest();
  std::int64_t total = 0;
  struct Frame {
    std::vector<int> walk;
  };
  std::vector<std::vector<int>> stack{{root}};
  while (!stack.empty()) {
    std::vector<int> walk = std::move(stack.back());
    stack.pop_back();
    int cur = walk.back();
    for (int nxt = 0; nxt < g.n; ++nxt) {
      if (g.adj[cur][nxt] <= 0) continue;
      if (nxt == root && walk.size() >= 2) {
        // closed: check simple, exact vertex set
        VertexSet visited;
        bool simple = true;
        for (int v : walk) {
          if (visited.contains(v)) simple = false;
          visited.insert(v);
        }
        if (simple && visited == w) {
          std::int64_t prod = 1;
          for (std::size_t i = 0; i + 1 < walk.size(); ++i) prod *= g.adj[walk[i]][walk[i + 1]];
          prod *= g.adj[walk.back()][root];
          total += prod;
        }
      }
      if (static_cast<int>(walk.size()) < w.count() && nxt != root && w.contains(nxt)) {
        std::vector<int> next = walk;
        next.push_back(nxt);
        stack.push_back(std::move(next));
      }
    }
  }
  return total;
}

// Full catalog by the oracle above over every nonempty subset.
inline std::map<VertexSet, std::int64_t> brute_force_catalog(const MultiDigraph& g) {
  std::map<VertexSet, std::int64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.n); ++s) {
    std::int64_t c = brute_force_cycle_count(g, VertexSet{s});
    if (c > 0) out[VertexSet{s}] = c;
  }
  return out;
}

// Equality of multidigraphs up to relabeling, by trying all permutations.
inline bool multidigraphs_isomorphic(const MultiDigraph& a, const MultiDigraph& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  for (int i = 0; i < a.n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = 0; j < a.n && ok; ++j) ok = a.adj[i][j] == b.adj[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Deterministic random multidigraphs; arc density and multiplicities kept
// small so phi images stay checkable.
inline MultiDigraph random_digraph(std::mt19937_64& rng, int max_n, int max_mult,
                                   double arc_prob = 0.3) {
  std::uniform_int_distribution<int> nd(1, max_n);
  std::uniform_real_distribution<double> pd(0.0, 1.0);
  std::uniform_int_distribution<int> md(1, max_mult);
  int n = nd(rng);
  MultiDigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pd(rng) < arc_prob) g.adj[i][j] = md(rng);
  return g;
}

// Random multidigraph conditioned on a small total cycle count so the phi
// image fits the exact isomorphism checker.
inline MultiDigraph random_digraph_small_phi(std::mt19937_64& rng, int max_n, int max_mult,
                                             int max_cycles) {
  while (true) {
    MultiDigraph g = random_digraph(rng, max_n, max_mult);
    CycleOptions opts;
    opts.budget = max_cycles;
    try {
      build_cycle_catalog(g, opts);
      return g;
    } catch (const CycleBudgetExceeded&) {
      continue;
    }
  }
}

}  // namespace fixtures
