#include "cyclemonoid/realize.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "cyclemonoid/isomorphism.hpp"

namespace cyclemonoid {

std::string to_string(UnrealizableReason r) {
  switch (r) {
    case UnrealizableReason::InducedCycleFilter: return "InducedCycleFilter";
    case UnrealizableReason::SevenVertexSquareFilter: return "SevenVertexSquareFilter";
    case UnrealizableReason::ExhaustiveCoverSearch: return "ExhaustiveCoverSearch";
    case UnrealizableReason::CuratedSevenVertexTable: return "CuratedSevenVertexTable";
  }
  return "?";
}

namespace {

// Order the vertices of an induced cycle along the cycle.
std::vector<int> walk_cycle(const SimpleGraph& h, VertexSet s) {
  std::vector<int> verts = s.members();
  std::vector<int> order{verts[0]};
  std::uint64_t seen = std::uint64_t{1} << verts[0];
  bool advanced = true;
  while (advanced && order.size() < verts.size()) {
    advanced = false;
    int cur = order.back();
    for (int v : verts) {
      if ((seen >> v) & 1) continue;
      if (h.adjacent(cur, v)) {
        order.push_back(v);
        seen |= std::uint64_t{1} << v;
        advanced = true;
        break;
      }
    }
  }
  return order;  // shorter than |S| when the induced graph is disconnected
}

bool induced_is_cycle(const SimpleGraph& h, VertexSet s) {
  std::vector<int> verts = s.members();
  int k = static_cast<int>(verts.size());
  if (k < 3) return false;
  int edges = 0;
  for (int i = 0; i < k; ++i) {
    int deg = 0;
    for (int j = 0; j < k; ++j)
      if (i != j && h.adjacent(verts[i], verts[j])) ++deg;
    if (deg != 2) return false;
    edges += deg;
  }
  if (edges != 2 * k) return false;
  // degrees all 2 and |E| = |S|: connected iff a single cycle
  return static_cast<int>(walk_cycle(h, s).size()) == k;
}

}  // namespace

std::optional<InducedCycleWitness> induced_cycle_filter(const SimpleGraph& h) {
  int n = h.vertex_count();
  if (n > 24) throw std::length_error("induced_cycle_filter: exhaustive subset scan needs n <= 24");
  std::uint64_t full = VertexSet::full(n).bits;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (__builtin_popcountll(s) < 4) continue;
    if (!induced_is_cycle(h, VertexSet{s})) continue;
    std::vector<int> cyc = walk_cycle(h, VertexSet{s});
    int k = static_cast<int>(cyc.size());

    std::uint64_t neighborhood = s;  // C together with N(C)
    for (int v : cyc) neighborhood |= h.neighbors_mask(v);

    std::vector<int> hubs;  // vertices adjacent to every cycle vertex
    for (int w = 0; w < n; ++w) {
      if ((s >> w) & 1) continue;
      bool all = true;
      for (int v : cyc)
        if (!h.adjacent(w, v)) {
          all = false;
          break;
        }
      if (all && (h.neighbors_mask(w) & ~neighborhood) == 0) hubs.push_back(w);
    }

    bool ok = false;
    for (std::size_t a = 0; a < hubs.size() && !ok; ++a) {
      for (std::size_t b = a + 1; b < hubs.size() && !ok; ++b) {
        int w1 = hubs[a], w2 = hubs[b];
        if (h.adjacent(w1, w2)) {
          ok = true;
          break;
        }
        bool chained = true;
        for (int i = 0; i < k && chained; ++i) {
          int u = cyc[i], v = cyc[(i + 1) % k];
          std::uint64_t common = h.neighbors_mask(u) & h.neighbors_mask(v);
          common &= ~((std::uint64_t{1} << w1) | (std::uint64_t{1} << w2));
          chained = common != 0;
        }
        ok = chained;
      }
    }
    if (!ok) return InducedCycleWitness{VertexSet{s}};
  }
  return std::nullopt;
}

namespace {

// Square a-b-c-d with both apexes joined to everything: the phi-image of the
// bidirected square, the unique minimal digraph whose cycles realize an
// induced 4-cycle.
SimpleGraph square_with_two_apexes() {
  SimpleGraph h(6);
  for (int i = 0; i < 4; ++i) h.add_edge(i, (i + 1) % 4);
  for (int apex = 4; apex <= 5; ++apex)
    for (int i = 0; i < 4; ++i) h.add_edge(apex, i);
  h.add_edge(4, 5);
  return h;
}

SimpleGraph with_extra_vertex(const std::vector<int>& attach) {
  SimpleGraph base = square_with_two_apexes();
  SimpleGraph h(7);
  for (auto [u, v] : base.edges()) h.add_edge(u, v);
  for (int v : attach) h.add_edge(6, v);
  return h;
}

}  // namespace

SimpleGraph allowed_seven_vertex_graph(int which) {
  // A self-loop placed on the square-of-cycles digraph either sits inside a
  // single one of the four square cycles (then it also rides one of the two
  // long cycles) or on a crossing vertex shared by two adjacent square
  // cycles (then it rides both long cycles).
  if (which == 0) return with_extra_vertex({0, 4});
  if (which == 1) return with_extra_vertex({0, 3, 4, 5});
  throw std::out_of_range("allowed_seven_vertex_graph: index must be 0 or 1");
}

const std::vector<SimpleGraph>& curated_seven_vertex_unrealizable() {
  static const std::vector<SimpleGraph> graphs = [] {
    std::vector<SimpleGraph> out;
    // Triangle of triangles around a dominating center; no induced 4-cycle,
    // but the minimal clique cover forces an unsolvable system.
    SimpleGraph h1(7);
    for (int v = 1; v <= 6; ++v) h1.add_edge(0, v);
    h1.add_edge(1, 4);
    h1.add_edge(2, 5);
    h1.add_edge(3, 6);
    h1.add_edge(1, 2);
    h1.add_edge(2, 3);
    h1.add_edge(3, 1);
    out.push_back(h1);
    // The eight square-containing graphs that survive the induced-cycle test
    // but differ from both allowed phi-images.
    out.push_back(with_extra_vertex({0}));                 // pendant on a square corner
    out.push_back(with_extra_vertex({0, 3}));              // two adjacent corners
    out.push_back(with_extra_vertex({0, 3, 4}));           // two corners + one apex
    out.push_back(with_extra_vertex({0, 4, 5}));           // one corner + both apexes
    out.push_back(with_extra_vertex({0, 2, 4, 5}));        // opposite corners + both apexes
    out.push_back(with_extra_vertex({0, 1, 2, 4, 5}));     // three corners + both apexes
    out.push_back(with_extra_vertex({0, 1, 2, 3, 4}));     // all corners + one apex
    out.push_back(with_extra_vertex({0, 1, 2, 3, 4, 5}));  // dominating vertex
    return out;
  }();
  return graphs;
}

namespace {

const std::set<std::string>& curated_canonical_keys() {
  static const std::set<std::string> keys = [] {
    std::set<std::string> k;
    for (const SimpleGraph& g : curated_seven_vertex_unrealizable()) k.insert(canonical_form(g));
    return k;
  }();
  return keys;
}

bool contains_induced_four_cycle(const SimpleGraph& h) {
  int n = h.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          VertexSet s;
          s.insert(a);
          s.insert(b);
          s.insert(c);
          s.insert(d);
          if (induced_is_cycle(h, s)) return true;
        }
  return false;
}

}  // namespace

bool seven_vertex_square_filter_passes(const SimpleGraph& h) {
  if (h.vertex_count() != 7) return true;
  if (!contains_induced_four_cycle(h)) return true;
  for (int which = 0; which < 2; ++which)
    if (are_isomorphic(h, allowed_seven_vertex_graph(which))) return true;
  return false;
}

bool in_curated_table(const SimpleGraph& h) {
  if (h.vertex_count() != 7) return false;
  return curated_canonical_keys().count(canonical_form(h)) > 0;
}

namespace {

bool graph_connected(const SimpleGraph& h) {
  int n = h.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (!seen[u] && h.adjacent(v, u)) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

MultiDigraph witness_from_solution(const SolutionMatrix& m) {
  MultiDigraph g(static_cast<int>(m.size()));
  g.adj = m;
  return g;
}

void verify_witness(const SimpleGraph& h, const MultiDigraph& witness,
                    const RealizeBudgets& budgets) {
  CycleOptions copts;
  copts.budget = budgets.cycle_budget;
  PhiResult p = phi(witness, copts);
  if (!are_isomorphic(p.h, h, std::max(16, h.vertex_count())))
    throw std::logic_error("realize: witness failed phi verification");
}

}  // namespace

RealizabilityVerdict realize(const SimpleGraph& h, const RealizeBudgets& budgets) {
  auto t0 = std::chrono::steady_clock::now();
  RealizabilityVerdict verdict;
  auto finish = [&](RealizabilityVerdict v) {
    v.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return v;
  };

  int n = h.vertex_count();
  if (n == 0) {
    verdict.kind = RealizabilityVerdict::Kind::Realizable;
    verdict.witness = MultiDigraph(0);
    return finish(verdict);
  }
  if (n == 1) {
    verdict.kind = RealizabilityVerdict::Kind::Realizable;
    verdict.witness = bouquet(1);
    verdict.cover.cliques = {VertexSet::single(0)};
    verdict.solution = {{1}};
    verify_witness(h, verdict.witness, budgets);
    return finish(verdict);
  }
  if (!graph_connected(h))
    throw std::invalid_argument("realize: H must be connected (decompose into components first)");

  if (auto fail = induced_cycle_filter(h)) {
    verdict.kind = RealizabilityVerdict::Kind::Unrealizable;
    verdict.reason = UnrealizableReason::InducedCycleFilter;
    return finish(verdict);
  }
  if (!seven_vertex_square_filter_passes(h)) {
    verdict.kind = RealizabilityVerdict::Kind::Unrealizable;
    verdict.reason = UnrealizableReason::SevenVertexSquareFilter;
    return finish(verdict);
  }
  if (in_curated_table(h)) {
    verdict.kind = RealizabilityVerdict::Kind::Unrealizable;
    verdict.reason = UnrealizableReason::CuratedSevenVertexTable;
    return finish(verdict);
  }

  int size_cap = std::max(1, n - 1);
  if (budgets.min_cover_only) size_cap = minimum_clique_cover_size(h);

  RealizeStats stats;
  bool solver_budget_hit = false;
  std::optional<RealizabilityVerdict> found;
  CoverEnumerationResult covers = enumerate_clique_covers(h, size_cap, [&](const CliqueCover& cover) {
    if (stats.covers_tried >= budgets.cover_budget) {
      stats.budget_exhausted_at = "cover_budget";
      return false;
    }
    ++stats.covers_tried;
    DiophantineSystem sys = build_system(h, cover);
    SolveOptions sopts;
    sopts.node_budget = budgets.solver_node_budget;
    SolveOutcome out = solve_system(sys, sopts);
    stats.solver_nodes += out.nodes;
    if (out.status == SolveOutcome::Status::BudgetExhausted) {
      solver_budget_hit = true;
      return true;  // keep looking for an easier cover
    }
    if (out.status == SolveOutcome::Status::Sat) {
      RealizabilityVerdict v;
      v.kind = RealizabilityVerdict::Kind::Realizable;
      v.witness = witness_from_solution(out.solution);
      v.cover = cover;
      v.solution = out.solution;
      found = std::move(v);
      return false;
    }
    return true;
  });

  if (found) {
    found->stats = stats;
    verify_witness(h, found->witness, budgets);
    return finish(*found);
  }
  // Exhausting only the minimum-size covers proves nothing: minimal-cover
  // sufficiency is conjectural, so the restricted mode never certifies
  // unrealizability.
  if (covers.exhausted && !solver_budget_hit && !budgets.min_cover_only) {
    verdict.kind = RealizabilityVerdict::Kind::Unrealizable;
    verdict.reason = UnrealizableReason::ExhaustiveCoverSearch;
    verdict.stats = stats;
    return finish(verdict);
  }
  if (covers.exhausted && !solver_budget_hit && budgets.min_cover_only &&
      stats.budget_exhausted_at.empty())
    stats.budget_exhausted_at = "min_cover_restriction";
  verdict.kind = RealizabilityVerdict::Kind::Undecided;
  if (solver_budget_hit && stats.budget_exhausted_at.empty())
    stats.budget_exhausted_at = "solver_budget";
  verdict.stats = stats;
  return finish(verdict);
}

MultiDigraph realize_tree(const SimpleGraph& tree) {
  int n = tree.vertex_count();
  if (n == 0) return MultiDigraph(0);
  auto edges = tree.edges();
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("realize_tree: not a tree (edge count)");
  // Connectivity: reach everything from vertex 0.
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (!seen[u] && tree.adjacent(v, u)) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n) throw std::invalid_argument("realize_tree: not a tree (disconnected)");
  }
  if (n == 1) {
    // A single vertex is its own degenerate realization target: one cycle.
    return bouquet(1);
  }
  MultiDigraph g(static_cast<int>(edges.size()));
  for (int v = 0; v < n; ++v) {
    std::vector<int> incident;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == v || edges[e].second == v) incident.push_back(static_cast<int>(e));
    for (std::size_t k = 0; k < incident.size(); ++k)
      g.add_arc(incident[k], incident[(k + 1) % incident.size()]);
  }
  return g;
}

VertexEdgeBounds vertex_edge_bounds(const SimpleGraph& h) {
  if (h.vertex_count() < 2)
    throw std::invalid_argument("vertex_edge_bounds: need at least two vertices");
  return VertexEdgeBounds{minimum_clique_cover_size(h), h.vertex_count() - 1,
                          2 * h.vertex_count() - 2};
}

SimpleGraph trace_monoid_family_graph(int n) {
  if (n < 0) throw std::invalid_argument("trace_monoid_family_graph: n >= 0 required");
  SimpleGraph h(4 + n);
  for (int u = 0; u < 4 + n; ++u)
    for (int v = u + 1; v < 4 + n; ++v) {
      if ((u == 0 && v == 2) || (u == 1 && v == 3)) continue;  // ac and bd commute
      h.add_edge(u, v);
    }
  return h;
}

RealizabilityVerdict trace_monoid_family_check(int n, const RealizeBudgets& budgets) {
  return realize(trace_monoid_family_graph(n), budgets);
}

}  // namespace cyclemonoid
