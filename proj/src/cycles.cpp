#include "cyclemonoid/cycles.hpp"

#include <algorithm>

namespace cyclemonoid {

std::int64_t cycle_count_for_set(const MultiDigraph& g, VertexSet w) {
  if (w.empty()) throw std::invalid_argument("cycle_count_for_set: empty vertex set");
  std::vector<int> verts = w.members();
  for (int v : verts) g.check_vertex(v);
  if (verts.size() == 1) return g.adj[verts[0]][verts[0]];
  // Fix the least vertex as the root and walk over orderings of the rest;
  // each ordering is one cyclic permutation of W.
  int root = verts[0];
  std::vector<int> rest(verts.begin() + 1, verts.end());
  std::sort(rest.begin(), rest.end());
  std::int64_t total = 0;
  do {
    std::int64_t prod = g.adj[root][rest.front()];
    for (std::size_t i = 0; i + 1 < rest.size() && prod != 0; ++i)
      prod *= g.adj[rest[i]][rest[i + 1]];
    if (prod != 0) prod *= g.adj[rest.back()][root];
    total += prod;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return total;
}

namespace {

struct CycleSearch {
  const MultiDigraph& g;
  const CycleOptions& opts;
  CycleCatalog out;
  std::int64_t found = 0;

  // Scratch for one root.
  int root = 0;
  std::uint64_t allowed = 0;  // vertices usable on the current path
  std::uint64_t on_path = 0;
  std::vector<int> path;
  std::vector<std::uint64_t> blocked_by;  // Johnson-style unblock sets
  std::vector<bool> blocked;

  void record(std::uint64_t mask, std::int64_t weight) {
    if (weight > opts.budget) throw CycleBudgetExceeded(found);
    found += weight;
    if (found > opts.budget) throw CycleBudgetExceeded(found - weight);
    out.counts[VertexSet{mask}] += weight;
  }

  // Plain depth-first search over simple paths from the root, each arc
  // weighted by its multiplicity. Closing back to the root records one
  // vertex-set worth of cycles.
  bool dfs(int v, std::int64_t weight) {
    bool closed = false;
    for (int w = 0; w < g.n; ++w) {
      std::int64_t m = g.adj[v][w];
      if (m <= 0) continue;
      if (w == root) {
        if (v == root) continue;  // self-loops are recorded separately
        std::int64_t wgt = saturating_mul(weight, m);
        record(on_path, wgt);
        closed = true;
        continue;
      }
      if (!((allowed >> w) & 1) || ((on_path >> w) & 1)) continue;
      if (opts.johnson_blocking && blocked[w]) continue;
      on_path |= std::uint64_t{1} << w;
      path.push_back(w);
      bool sub = dfs(w, saturating_mul(weight, m));
      closed |= sub;
      path.pop_back();
      on_path &= ~(std::uint64_t{1} << w);
      if (opts.johnson_blocking) {
        if (sub) {
          unblock(w);
        } else {
          blocked[w] = true;
          for (int u = 0; u < g.n; ++u)
            if (g.adj[w][u] > 0 && ((allowed >> u) & 1)) blocked_by[u] |= std::uint64_t{1} << w;
        }
      }
    }
    return closed;
  }

  void unblock(int v) {
    blocked[v] = false;
    std::uint64_t waiting = blocked_by[v];
    blocked_by[v] = 0;
    for (; waiting; waiting &= waiting - 1) {
      int u = __builtin_ctzll(waiting);
      if (blocked[u]) unblock(u);
    }
  }

  // Budget arithmetic: any product that would exceed the budget is clamped,
  // and a clamped weight reaching record() necessarily trips the budget.
  std::int64_t saturating_mul(std::int64_t a, std::int64_t b) const {
    if (a > 0 && b > opts.budget / a + 1) return opts.budget + 1;
    return a * b;
  }
};

}  // namespace

CycleCatalog build_cycle_catalog(const MultiDigraph& g, const CycleOptions& opts) {
  if (g.n > VertexSet::kCapacity)
    throw std::length_error("build_cycle_catalog: more vertices than the vertex-set capacity");
  CycleSearch search{g, opts};
  search.out.base_n = g.n;
  for (int i = 0; i < g.n; ++i)
    if (g.adj[i][i] > 0) search.record(std::uint64_t{1} << i, g.adj[i][i]);

  for (const auto& scc : strongly_connected_components(g)) {
    if (scc.size() < 2) continue;
    std::uint64_t scc_mask = 0;
    for (int v : scc) scc_mask |= std::uint64_t{1} << v;
    // Least-root convention: cycles are rooted at their smallest vertex, so
    // the search from root r uses only vertices > r within the component.
    for (std::size_t k = 0; k < scc.size(); ++k) {
      int r = scc[k];
      search.root = r;
      search.allowed = scc_mask;
      for (std::size_t j = 0; j <= k; ++j) search.allowed &= ~(std::uint64_t{1} << scc[j]);
      search.on_path = std::uint64_t{1} << r;
      search.path.assign(1, r);
      search.blocked.assign(g.n, false);
      search.blocked_by.assign(g.n, 0);
      search.dfs(r, 1);
    }
  }
  return search.out;
}

PhiResult phi_from_catalog(const CycleCatalog& catalog) {
  PhiResult res;
  for (const auto& [w, count] : catalog.counts)
    for (std::int64_t i = 0; i < count; ++i) res.labels.push_back(w);
  int m = static_cast<int>(res.labels.size());
  res.h = SimpleGraph(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (res.labels[u].intersects(res.labels[v])) res.h.add_edge(u, v);
  return res;
}

PhiResult phi(const MultiDigraph& g, const CycleOptions& opts) {
  return phi_from_catalog(build_cycle_catalog(g, opts));
}

PhiResult phi_of_disjoint_union(const std::vector<PhiResult>& parts) {
  PhiResult res;
  int total = 0;
  for (const auto& p : parts) total += p.h.vertex_count();
  res.h = SimpleGraph(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.h.edges()) res.h.add_edge(offset + u, offset + v);
    res.labels.insert(res.labels.end(), p.labels.begin(), p.labels.end());
    offset += p.h.vertex_count();
  }
  return res;
}

}  // namespace cyclemonoid
