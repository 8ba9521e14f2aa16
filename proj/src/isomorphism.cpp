#include "cyclemonoid/isomorphism.hpp"

#include <algorithm>
#include <cstdint>

#include "cyclemonoid/graph6.hpp"

namespace cyclemonoid {

namespace {

// (degree, sorted neighbor degrees) per vertex; a cheap permutation-invariant
// refinement that kills most non-isomorphic pairs before any search.
std::vector<std::vector<int>> vertex_signatures(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v].push_back(deg[v]);
    std::vector<int> nd;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u)) nd.push_back(deg[u]);
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

struct IsoSearch {
  const SimpleGraph& a;
  const SimpleGraph& b;
  const std::vector<std::vector<int>>& sig_a;
  const std::vector<std::vector<int>>& sig_b;
  std::vector<int> order;    // vertices of a in mapping order
  std::vector<int> map;      // a-vertex -> b-vertex
  std::vector<bool> used_b;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int va = order[depth];
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
      if (used_b[vb] || sig_a[va] != sig_b[vb]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d)
        ok = a.adjacent(va, order[d]) == b.adjacent(vb, map[order[d]]);
      if (!ok) continue;
      map[va] = vb;
      used_b[vb] = true;
      if (extend(depth + 1)) return true;
      used_b[vb] = false;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, int max_n) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  if (n > max_n) throw std::length_error("are_isomorphic: size cap exceeded");
  auto sig_a = vertex_signatures(a);
  auto sig_b = vertex_signatures(b);
  auto sorted_a = sig_a;
  auto sorted_b = sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;

  IsoSearch s{a, b, sig_a, sig_b, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
  s.order.resize(n);
  for (int v = 0; v < n; ++v) s.order[v] = v;
  // Map high-degree vertices first; they constrain the search most.
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    int dx = a.degree(x), dy = a.degree(y);
    return dx != dy ? dx > dy : x < y;
  });
  return s.extend(0);
}

namespace {

// Branch-and-bound over vertex placements. Placing the vertex at position j
// reveals column j of the upper triangle (bits (i,j) for i < j in graph6
// order). Row i is packed at bit 63-i so integer comparison of a column
// agrees with lexicographic comparison of its bit string, and comparing the
// column vectors front to back compares whole strings.
struct CanonSearch {
  const SimpleGraph& g;
  int n;
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> current;
  std::vector<int> place;
  std::vector<bool> used;
  bool have_best = false;

  explicit CanonSearch(const SimpleGraph& graph)
      : g(graph), n(graph.vertex_count()), best(n, 0), current(n, 0), place(n, -1), used(n, false) {}

  std::uint64_t column_for(int v, int depth) const {
    std::uint64_t col = 0;
    for (int i = 0; i < depth; ++i)
      if (g.adjacent(place[i], v)) col |= std::uint64_t{1} << (63 - i);
    return col;
  }

  // -1 / 0 / +1 for current[0..depth-1] versus best[0..depth-1]. Must be
  // re-evaluated per candidate: a best update inside one child invalidates
  // the relation for its siblings.
  int compare_prefix(int depth) const {
    for (int k = 0; k < depth; ++k) {
      if (current[k] != best[k]) return current[k] < best[k] ? -1 : 1;
    }
    return 0;
  }

  void search(int depth) {
    if (depth == n) {
      if (!have_best || compare_prefix(n) < 0) {
        best = current;
        have_best = true;
      }
      return;
    }
    std::vector<std::pair<std::uint64_t, int>> cands;
    for (int v = 0; v < n; ++v)
      if (!used[v]) cands.emplace_back(column_for(v, depth), v);
    std::sort(cands.begin(), cands.end());
    for (auto [col, v] : cands) {
      if (have_best) {
        int cmp = compare_prefix(depth);
        if (cmp > 0) return;  // a descendant's update beat this whole node
        if (cmp == 0 && col > best[depth]) break;  // candidates sorted by column
      }
      current[depth] = col;
      place[depth] = v;
      used[v] = true;
      search(depth + 1);
      used[v] = false;
    }
  }
};

}  // namespace

std::string canonical_form(const SimpleGraph& h, int max_n) {
  int n = h.vertex_count();
  if (n > max_n) throw std::length_error("canonical_form: size cap exceeded");
  if (n > 62) throw std::length_error("canonical_form: graph6 keys need n <= 62");
  CanonSearch s(h);
  s.search(0);
  SimpleGraph canon(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((s.best[j] >> (63 - i)) & 1) canon.add_edge(i, j);
  return to_graph6(canon);
}

}  // namespace cyclemonoid
