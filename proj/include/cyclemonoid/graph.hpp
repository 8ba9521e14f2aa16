#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclemonoid {

// Subset of vertices 0..63 as a fixed-width bitmask. Wide enough for every
// graph handled here; the capacity constant is part of the contract so call
// sites can static_assert against it if they ever need more.
struct VertexSet {
  std::uint64_t bits = 0;
  static constexpr int kCapacity = 64;

  static VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  static VertexSet full(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  bool contains(int v) const { return (bits >> v) & 1u; }
  void insert(int v) { bits |= std::uint64_t{1} << v; }
  void erase(int v) { bits &= ~(std::uint64_t{1} << v); }
  int count() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  int lowest() const { return __builtin_ctzll(bits); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
  friend bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }
};

// Directed multigraph stored as an n x n matrix of arc multiplicities.
// adj[i][j] is the number of parallel arcs i -> j; the diagonal holds
// self-loop counts. Cycle counting and realizability only ever need these
// counts, so individual arc identities are never materialized.
struct MultiDigraph {
  int n = 0;
  std::vector<std::vector<std::int64_t>> adj;

  MultiDigraph() = default;
  explicit MultiDigraph(int vertices)
      : n(vertices), adj(vertices, std::vector<std::int64_t>(vertices, 0)) {
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
  }

  void add_arc(int u, int v, std::int64_t multiplicity = 1) {
    check_vertex(u);
    check_vertex(v);
    if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    adj[u][v] += multiplicity;
  }

  std::int64_t out_degree(int v) const {
    std::int64_t d = 0;
    for (int j = 0; j < n; ++j) d += adj[v][j];
    return d;
  }
  std::int64_t in_degree(int v) const {
    std::int64_t d = 0;
    for (int i = 0; i < n; ++i) d += adj[i][v];
    return d;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
  }

  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    return a.n == b.n && a.adj == b.adj;
  }
};

// Undirected simple graph with adjacency-bitset rows. No self-loops, no
// parallel edges. Supports any n; the 64-bit neighbor masks used by the
// clique machinery are only available for n <= 64.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  int vertex_count() const { return n_; }

  bool adjacent(int u, int v) const {
    check(u);
    check(v);
    return (row(u)[v / 64] >> (v % 64)) & 1u;
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loops not allowed in a simple graph");
    row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
  }

  int degree(int v) const {
    check(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row(v)[w]);
    return d;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  // Sorted list of edges {u, v} with u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  // Neighborhood as a 64-bit mask; only valid when vertex_count() <= 64.
  std::uint64_t neighbors_mask(int v) const {
    check(v);
    if (n_ > 64) throw std::length_error("graph too large for 64-bit masks");
    return words_ == 0 ? 0 : row(v)[0];
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  std::uint64_t* row(int v) { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Edge-list text format: a header line "n <count>" followed by lines
// "u v [k]" adding k (default 1) parallel arcs u -> v.
MultiDigraph parse_edge_list(const std::string& text);
std::string format_edge_list(const MultiDigraph& g);

// Maximal strongly connected components; parts are sorted internally and
// ordered by their smallest vertex. Any positive multiplicity counts as
// reachability.
std::vector<std::vector<int>> strongly_connected_components(const MultiDigraph& g);

// Subgraph induced by S, vertices relabeled 0..|S|-1 in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& h, VertexSet s);

// Every nonempty clique of h (singletons included), as vertex sets in
// increasing mask order. Requires vertex_count() <= 64.
std::vector<VertexSet> enumerate_cliques(const SimpleGraph& h);

// Convenience builders used all over the tests and the CLI.
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
MultiDigraph bouquet(int loops);
MultiDigraph ladder_digraph(int n);   // phi = K_n for n >= 3
MultiDigraph flower_digraph(int petals);  // phi = K_{n^2+1}
MultiDigraph bidirected(const SimpleGraph& h);

}  // namespace cyclemonoid
