#include "cyclemonoid/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cyclemonoid {

MultiDigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  MultiDigraph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (!have_header) {
      if (first != "n")
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": expected header \"n <count>\"");
      long long n;
      std::string rest;
      if (!(ls >> n) || n < 0 || (ls >> rest))
        throw std::runtime_error("edge list line " + std::to_string(lineno) + ": malformed header");
      g = MultiDigraph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    long long u, v, k = 1;
    std::size_t used = 0;
    try {
      u = std::stoll(first, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) + ": malformed line");
    }
    if (used != first.size() || !(ls >> v))
      throw std::runtime_error("edge list line " + std::to_string(lineno) + ": malformed line");
    std::string rest;
    if (ls >> k) {
      if (ls >> rest)
        throw std::runtime_error("edge list line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": vertex index out of range");
    if (k < 0)
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": negative multiplicity");
    g.adj[u][v] += k;
  }
  if (!have_header) throw std::runtime_error("edge list: missing header \"n <count>\"");
  return g;
}

std::string format_edge_list(const MultiDigraph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.adj[i][j] > 0) out << i << " " << j << " " << g.adj[i][j] << "\n";
  return out.str();
}

namespace {

// Tarjan, iterative to keep stack depth independent of graph shape.
struct TarjanState {
  const MultiDigraph& g;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  explicit TarjanState(const MultiDigraph& graph)
      : g(graph), index(graph.n, -1), low(graph.n, 0), comp(graph.n, -1), on_stack(graph.n, false) {}

  void run(int root) {
    struct Frame {
      int v;
      int next_child;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      bool descended = false;
      while (f.next_child < g.n) {
        int w = f.next_child++;
        if (g.adj[v][w] <= 0) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const MultiDigraph& g) {
  TarjanState st(g);
  for (int v = 0; v < g.n; ++v)
    if (st.index[v] == -1) st.run(v);
  std::vector<std::vector<int>> parts(st.next_comp);
  for (int v = 0; v < g.n; ++v) parts[st.comp[v]].push_back(v);
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

SimpleGraph induced_subgraph(const SimpleGraph& h, VertexSet s) {
  std::vector<int> verts = s.members();
  for (int v : verts)
    if (v >= h.vertex_count()) throw std::out_of_range("induced_subgraph: vertex out of range");
  SimpleGraph out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (h.adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

namespace {

void extend_clique(const SimpleGraph& h, std::uint64_t clique, std::uint64_t candidates,
                   std::vector<VertexSet>& out) {
  out.push_back(VertexSet{clique});
  for (std::uint64_t c = candidates; c; c &= c - 1) {
    int v = __builtin_ctzll(c);
    std::uint64_t bit = std::uint64_t{1} << v;
    extend_clique(h, clique | bit, (candidates & h.neighbors_mask(v)) & ~(bit | (bit - 1)), out);
  }
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const SimpleGraph& h) {
  std::vector<VertexSet> out;
  for (int v = 0; v < h.vertex_count(); ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t higher = ~(bit | (bit - 1));
    if (h.vertex_count() < 64) higher &= (std::uint64_t{1} << h.vertex_count()) - 1;
    extend_clique(h, bit, h.neighbors_mask(v) & higher, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.add_edge(i, j);
  return h;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph h(n);
  if (n == 2) {
    h.add_edge(0, 1);
    return h;
  }
  for (int i = 0; i < n; ++i) h.add_edge(i, (i + 1) % n);
  return h;
}

MultiDigraph bouquet(int loops) {
  MultiDigraph g(1);
  g.adj[0][0] = loops;
  return g;
}

// Two directed rails of n-2 rungs feeding a return vertex: every source-to-sink
// path closes into a distinct simple cycle through the shared end vertices.
MultiDigraph ladder_digraph(int n) {
  if (n < 3) throw std::invalid_argument("ladder_digraph: need n >= 3");
  int k = n - 2;  // rail length
  MultiDigraph g(2 * k + 2);
  int left = 2 * k, right = 2 * k + 1;
  auto bottom = [](int i) { return 2 * i; };
  auto top = [](int i) { return 2 * i + 1; };
  g.add_arc(left, bottom(0));
  g.add_arc(left, top(0));
  for (int i = 0; i < k; ++i) {
    g.add_arc(bottom(i), top(i));
    if (i + 1 < k) {
      g.add_arc(bottom(i), bottom(i + 1));
      g.add_arc(top(i), top(i + 1));
    }
  }
  g.add_arc(bottom(k - 1), right);
  g.add_arc(top(k - 1), right);
  g.add_arc(right, left);
  return g;
}

// Hub bidirected to every petal vertex plus a directed ring over the petals;
// the ring on one petal degenerates to a self-loop.
MultiDigraph flower_digraph(int petals) {
  if (petals < 1) throw std::invalid_argument("flower_digraph: need at least one petal");
  MultiDigraph g(petals + 1);
  int hub = 0;
  for (int p = 1; p <= petals; ++p) {
    g.add_arc(hub, p);
    g.add_arc(p, hub);
  }
  for (int p = 1; p <= petals; ++p) g.add_arc(p, p % petals + 1);
  return g;
}

MultiDigraph bidirected(const SimpleGraph& h) {
  MultiDigraph g(h.vertex_count());
  for (auto [u, v] : h.edges()) {
    g.add_arc(u, v);
    g.add_arc(v, u);
  }
  return g;
}

}  // namespace cyclemonoid
