#include "cyclemonoid/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace cyclemonoid {

MultiDigraph reverse_all(const MultiDigraph& g) {
  MultiDigraph out(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) out.adj[j][i] = g.adj[i][j];
  return out;
}

bool jumpable(const MultiDigraph& g, int v) {
  g.check_vertex(v);
  if (g.adj[v][v] != 0) return false;  // a self-loop is a cycle the splice would destroy
  int out_targets = 0, in_sources = 0;
  for (int w = 0; w < g.n; ++w) {
    if (g.adj[v][w] > 0) ++out_targets;
    if (g.adj[w][v] > 0) ++in_sources;
  }
  return out_targets <= 1 || in_sources <= 1;
}

MultiDigraph jump(const MultiDigraph& g, int v) {
  if (!jumpable(g, v))
    throw std::invalid_argument("jump: vertex has a self-loop or fans out and in simultaneously");
  MultiDigraph out(g.n - 1);
  auto relabel = [&](int x) { return x < v ? x : x - 1; };
  for (int i = 0; i < g.n; ++i) {
    if (i == v) continue;
    for (int j = 0; j < g.n; ++j) {
      if (j == v) continue;
      out.adj[relabel(i)][relabel(j)] = g.adj[i][j] + g.adj[i][v] * g.adj[v][j];
    }
  }
  return out;
}

std::pair<MultiDigraph, TransformLog> reduce(const MultiDigraph& g) {
  MultiDigraph cur = g;
  TransformLog log;
  bool changed = true;
  while (changed && cur.n > 1) {
    changed = false;
    for (int v = 0; v < cur.n; ++v) {
      if (cur.adj[v][v] != 0) continue;
      if (cur.in_degree(v) != 1 && cur.out_degree(v) != 1) continue;
      log.steps.push_back({TransformStep::Op::Jump, v, -1});
      cur = jump(cur, v);
      changed = true;
      break;  // restart from the lowest index
    }
  }
  return {cur, log};
}

MultiDigraph to_cubic(const MultiDigraph& g) {
  std::vector<std::int64_t> indeg(g.n), outdeg(g.n);
  std::int64_t total_ports = 0;
  for (int v = 0; v < g.n; ++v) {
    indeg[v] = g.in_degree(v);
    outdeg[v] = g.out_degree(v);
    if (indeg[v] + outdeg[v] < 3)
      throw std::invalid_argument("to_cubic: vertex with total degree < 3 (reduce first)");
    if (indeg[v] == 0 || outdeg[v] == 0)
      throw std::invalid_argument("to_cubic: vertex with no in- or out-arcs");
    total_ports += indeg[v] + outdeg[v];
  }
  if (total_ports > 1'000'000) throw std::length_error("to_cubic: multiplicity expansion too large");

  // One chain of indeg+outdeg-2 vertices per original vertex. In-port p
  // lands on chain[max(0, p-1)] (ports 0 and 1 share the head); out-port q
  // leaves from chain[min(indeg+q-1, len-1)] (the last two share the tail).
  std::vector<int> offset(g.n + 1, 0);
  for (int v = 0; v < g.n; ++v)
    offset[v + 1] = offset[v] + static_cast<int>(indeg[v] + outdeg[v] - 2);
  MultiDigraph out(offset[g.n]);

  auto in_port_vertex = [&](int v, std::int64_t p) {
    return offset[v] + static_cast<int>(std::max<std::int64_t>(0, p - 1));
  };
  auto out_port_vertex = [&](int v, std::int64_t q) {
    std::int64_t len = indeg[v] + outdeg[v] - 2;
    return offset[v] + static_cast<int>(std::min(indeg[v] + q - 1, len - 1));
  };

  for (int v = 0; v < g.n; ++v) {
    int len = static_cast<int>(indeg[v] + outdeg[v] - 2);
    for (int t = 0; t + 1 < len; ++t) out.add_arc(offset[v] + t, offset[v] + t + 1);
  }

  // Ports are consumed in ascending neighbor order, parallel arcs pairing up
  // positionally on both sides.
  std::vector<std::int64_t> next_in(g.n, 0), next_out(g.n, 0);
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      std::int64_t mult = g.adj[u][v];
      for (std::int64_t t = 0; t < mult; ++t)
        out.add_arc(out_port_vertex(u, next_out[u] + t), in_port_vertex(v, next_in[v] + t));
      next_out[u] += mult;
      next_in[v] += mult;
    }
  }
  return out;
}

MultiDigraph glue(const MultiDigraph& g1, int v1, const MultiDigraph& g2, int v2) {
  g1.check_vertex(v1);
  g2.check_vertex(v2);
  MultiDigraph out(g1.n + g2.n - 1);
  auto map2 = [&](int u) { return u == v2 ? v1 : (u < v2 ? g1.n + u : g1.n + u - 1); };
  for (int i = 0; i < g1.n; ++i)
    for (int j = 0; j < g1.n; ++j) out.adj[i][j] += g1.adj[i][j];
  for (int i = 0; i < g2.n; ++i)
    for (int j = 0; j < g2.n; ++j) out.adj[map2(i)][map2(j)] += g2.adj[i][j];
  return out;
}

MultiDigraph replay(const MultiDigraph& start, const TransformLog& log) {
  MultiDigraph cur = start;
  for (const TransformStep& step : log.steps) {
    switch (step.op) {
      case TransformStep::Op::ReverseAll: cur = reverse_all(cur); break;
      case TransformStep::Op::Jump: cur = jump(cur, step.vertex); break;
      case TransformStep::Op::CubicSplit: cur = to_cubic(cur); break;
      case TransformStep::Op::Glue:
        throw std::invalid_argument("replay: glue steps need their second operand");
    }
  }
  return cur;
}

}  // namespace cyclemonoid
