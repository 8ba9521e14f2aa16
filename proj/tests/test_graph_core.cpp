#include <doctest.h>

#include <random>
#include <set>

#include "cyclemonoid/graph.hpp"
#include "cyclemonoid/graph6.hpp"
#include "cyclemonoid/isomorphism.hpp"
#include "fixtures.hpp"

using namespace cyclemonoid;

TEST_CASE("parse_edge_list basics") {
  MultiDigraph g = parse_edge_list("n 1\n0 0 3\n");
  CHECK(g.n == 1);
  CHECK(g.adj[0][0] == 3);

  MultiDigraph two = parse_edge_list("n 2\n0 1 1\n1 0 1\n");
  CHECK(two.adj[0][1] == 1);
  CHECK(two.adj[1][0] == 1);

  CHECK_THROWS(parse_edge_list("n 2\n0 5 1\n"));
  CHECK_THROWS(parse_edge_list("n 2\n0 1 -2\n"));
  CHECK_THROWS(parse_edge_list("n 2\nnonsense\n"));
  CHECK_THROWS(parse_edge_list("0 1\n"));

  // multiplicities on repeated lines accumulate
  MultiDigraph acc = parse_edge_list("n 2\n0 1\n0 1 2\n");
  CHECK(acc.adj[0][1] == 3);

  // round trip
  CHECK(parse_edge_list(format_edge_list(acc)) == acc);
}

TEST_CASE("graph6 decoding matches hand-decoded strings") {
  SimpleGraph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);

  SimpleGraph single = parse_graph6("@");
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  // 'r' - 63 = 51 = 110011: edges 01, 02, 13, 23 form a 4-cycle
  SimpleGraph c4 = parse_graph6("Cr");
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(0, 1));
  CHECK(c4.adjacent(0, 2));
  CHECK(c4.adjacent(1, 3));
  CHECK(c4.adjacent(2, 3));
  CHECK_FALSE(c4.adjacent(0, 3));
  CHECK_FALSE(c4.adjacent(1, 2));
  CHECK(are_isomorphic(c4, cycle_graph(4)));

  CHECK_THROWS(parse_graph6(""));
  CHECK_THROWS(parse_graph6("C"));     // truncated bits
  CHECK_THROWS(parse_graph6("C~~"));   // oversized
  CHECK_THROWS(parse_graph6("C\x1f")); // invalid character
}

TEST_CASE("graph6 round-trips through the writer") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pd(0, 1);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng() % 10);
    SimpleGraph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < 0.4) h.add_edge(u, v);
    CHECK(parse_graph6(to_graph6(h)) == h);
  }
}

TEST_CASE("strongly connected components") {
  MultiDigraph two_cycle = parse_edge_list("n 2\n0 1\n1 0\n");
  auto parts = strongly_connected_components(two_cycle);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::vector<int>{0, 1});

  MultiDigraph path = parse_edge_list("n 3\n0 1\n1 2\n");
  parts = strongly_connected_components(path);
  CHECK(parts.size() == 3);

  // 12-vertex subdivided bidirected square is one component
  parts = strongly_connected_components(fixtures::subdivided_bidirected_square());
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].size() == 12);
}

TEST_CASE("SCC output is a partition with acyclic condensation") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    MultiDigraph g = fixtures::random_digraph(rng, 7, 2, 0.25);
    auto parts = strongly_connected_components(g);
    std::set<int> seen;
    for (const auto& p : parts)
      for (int v : p) CHECK(seen.insert(v).second);
    CHECK(static_cast<int>(seen.size()) == g.n);

    // brute-force reachability closure
    std::vector<std::vector<bool>> reach(g.n, std::vector<bool>(g.n, false));
    for (int i = 0; i < g.n; ++i) reach[i][i] = true;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (g.adj[i][j] > 0) reach[i][j] = true;
    for (int k = 0; k < g.n; ++k)
      for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;

    // same component iff mutually reachable
    std::vector<int> comp(g.n, -1);
    for (std::size_t c = 0; c < parts.size(); ++c)
      for (int v : parts[c]) comp[v] = static_cast<int>(c);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        CHECK(((comp[i] == comp[j]) == (reach[i][j] && reach[j][i])));

    // condensation has a topological order (no mutual reach between parts)
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a + 1; b < parts.size(); ++b)
        CHECK_FALSE((reach[parts[a][0]][parts[b][0]] && reach[parts[b][0]][parts[a][0]]));
  }
}

TEST_CASE("induced subgraphs") {
  SimpleGraph k4 = complete_graph(4);
  VertexSet s;
  s.insert(0);
  s.insert(1);
  s.insert(2);
  CHECK(induced_subgraph(k4, s) == complete_graph(3));

  SimpleGraph c4 = cycle_graph(4);
  VertexSet e;
  e.insert(0);
  e.insert(1);
  SimpleGraph edge = induced_subgraph(c4, e);
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.edge_count() == 1);

  CHECK(induced_subgraph(c4, VertexSet{}).vertex_count() == 0);
  CHECK_THROWS(induced_subgraph(c4, VertexSet::single(9)));
}

TEST_CASE("clique enumeration") {
  CHECK(enumerate_cliques(complete_graph(3)).size() == 7);
  CHECK(enumerate_cliques(cycle_graph(4)).size() == 8);

  // the worked 5-vertex graph contains the three cover cliques
  SimpleGraph h = fixtures::five_vertex_example();
  auto cliques = enumerate_cliques(h);
  auto has = [&](std::initializer_list<int> verts) {
    VertexSet w;
    for (int v : verts) w.insert(v);
    return std::find(cliques.begin(), cliques.end(), w) != cliques.end();
  };
  CHECK(has({0, 1, 2}));
  CHECK(has({0, 1, 3}));
  CHECK(has({0, 1, 4}));

  // every enumerated set is a clique; count matches subset brute force
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pd(0, 1);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 1 + static_cast<int>(rng() % 7);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < 0.5) g.add_edge(u, v);
    auto found = enumerate_cliques(g);
    std::set<std::uint64_t> unique;
    for (VertexSet w : found) CHECK(unique.insert(w.bits).second);
    int expected = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      auto verts = VertexSet{s}.members();
      bool clique = true;
      for (std::size_t a = 0; a < verts.size() && clique; ++a)
        for (std::size_t b = a + 1; b < verts.size() && clique; ++b)
          clique = g.adjacent(verts[a], verts[b]);
      if (clique) ++expected;
    }
    CHECK(static_cast<int>(found.size()) == expected);
  }
}

namespace {

SimpleGraph permuted(const SimpleGraph& h, const std::vector<int>& perm) {
  SimpleGraph out(h.vertex_count());
  for (auto [u, v] : h.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace

TEST_CASE("isomorphism and canonical forms") {
  SimpleGraph c4 = cycle_graph(4);
  CHECK(are_isomorphic(c4, permuted(c4, {2, 0, 3, 1})));

  SimpleGraph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK_FALSE(are_isomorphic(c4, p4));

  SimpleGraph k4_minus = complete_graph(4);
  CHECK_FALSE(are_isomorphic(complete_graph(4), p4));
  SimpleGraph k4m(4);
  k4m.add_edge(0, 1);
  k4m.add_edge(0, 2);
  k4m.add_edge(0, 3);
  k4m.add_edge(1, 2);
  k4m.add_edge(1, 3);
  CHECK_FALSE(are_isomorphic(complete_graph(4), k4m));

  CHECK(canonical_form(c4) == canonical_form(permuted(c4, {3, 1, 0, 2})));
  CHECK(canonical_form(c4) != canonical_form(complete_graph(4)));
  CHECK(canonical_form(c4) == canonical_form(c4));  // pure function

  // canonical form is itself a graph6 string of an isomorphic graph
  CHECK(are_isomorphic(parse_graph6(canonical_form(c4)), c4));
}

TEST_CASE("isomorphism invariance under random permutations") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> pd(0, 1);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng() % 8);
    SimpleGraph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < 0.45) h.add_edge(u, v);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph hp = permuted(h, perm);
    CHECK(are_isomorphic(h, hp));
    CHECK(canonical_form(h) == canonical_form(hp));
  }
}
