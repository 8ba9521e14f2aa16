#include <doctest.h>

#include <random>

#include "cyclemonoid/isomorphism.hpp"
#include "cyclemonoid/transforms.hpp"
#include "fixtures.hpp"

using namespace cyclemonoid;

namespace {

bool phi_isomorphic(const MultiDigraph& a, const MultiDigraph& b) {
  PhiResult pa = phi(a);
  PhiResult pb = phi(b);
  return are_isomorphic(pa.h, pb.h, 14);
}

// Expected catalog after jumping v: each cycle keeps its vertex set minus v,
// relabeled densely.
std::map<VertexSet, std::int64_t> jumped_catalog(const CycleCatalog& before, int v) {
  std::map<VertexSet, std::int64_t> out;
  for (const auto& [w, c] : before.counts) {
    VertexSet mapped;
    for (int x : w.members()) {
      if (x == v) continue;
      mapped.insert(x < v ? x : x - 1);
    }
    out[mapped] += c;
  }
  return out;
}

}  // namespace

TEST_CASE("reverse_all") {
  MultiDigraph two_cycle = parse_edge_list("n 2\n0 1\n1 0\n");
  CHECK(reverse_all(two_cycle) == two_cycle);

  MultiDigraph path = parse_edge_list("n 3\n0 1\n1 2\n");
  MultiDigraph reversed = reverse_all(path);
  CHECK(reversed.adj[1][0] == 1);
  CHECK(reversed.adj[2][1] == 1);
  CHECK(reversed.adj[0][1] == 0);

  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    MultiDigraph g = fixtures::random_digraph_small_phi(rng, 6, 2, 12);
    CHECK(build_cycle_catalog(g).counts == build_cycle_catalog(reverse_all(g)).counts);
    CHECK(phi_isomorphic(g, reverse_all(g)));
  }
}

TEST_CASE("jump preconditions") {
  // self-loop blocks the jump
  MultiDigraph g = bouquet(1);
  CHECK_FALSE(jumpable(g, 0));
  CHECK_THROWS(jump(g, 0));

  // fan-in and fan-out at once blocks it
  MultiDigraph fan(5);
  fan.add_arc(0, 2);
  fan.add_arc(1, 2);
  fan.add_arc(2, 3);
  fan.add_arc(2, 4);
  CHECK_FALSE(jumpable(fan, 2));

  // single out-target is fine even with many sources
  MultiDigraph ok(4);
  ok.add_arc(0, 2);
  ok.add_arc(1, 2);
  ok.add_arc(2, 3);
  CHECK(jumpable(ok, 2));
}

TEST_CASE("jump on a triangle's transit vertex gives the backtrack") {
  MultiDigraph tri = parse_edge_list("n 3\n0 1\n1 2\n2 0\n");
  MultiDigraph jumped = jump(tri, 2);
  MultiDigraph expect = parse_edge_list("n 2\n0 1\n1 0\n");
  CHECK(jumped == expect);
}

TEST_CASE("jump preserves catalogs with planted transit vertices") {
  std::mt19937_64 rng(67);
  int tested = 0;
  while (tested < 500) {
    MultiDigraph g = fixtures::random_digraph(rng, 6, 2, 0.3);
    int v = static_cast<int>(rng() % g.n);
    if (!jumpable(g, v)) continue;
    ++tested;
    auto before = build_cycle_catalog(g);
    auto after = build_cycle_catalog(jump(g, v));
    CHECK(after.counts == jumped_catalog(before, v));
  }
}

TEST_CASE("jumping the transit vertices of the subdivided square recovers it") {
  MultiDigraph g = fixtures::subdivided_bidirected_square();
  auto [reduced, log] = reduce(g);
  CHECK(reduced == fixtures::bidirected_square());
  CHECK(log.steps.size() == 8);
  CHECK(replay(g, log) == reduced);
}

TEST_CASE("reduce reaches the named fixed points") {
  auto [b3, log_b3] = reduce(bouquet(3));
  CHECK(b3 == bouquet(3));
  CHECK(log_b3.steps.empty());

  auto [ladder_fixed, log_ladder] = reduce(ladder_digraph(4));
  CHECK(ladder_fixed == bouquet(4));

  // the flower's fixed point is only pinned up to phi
  auto [flower_fixed, log_flower] = reduce(flower_digraph(2));
  CHECK(phi_isomorphic(flower_fixed, flower_digraph(2)));
}

TEST_CASE("reduce is phi-confluent against a highest-first policy") {
  auto reduce_highest_first = [](MultiDigraph g) {
    bool changed = true;
    while (changed && g.n > 1) {
      changed = false;
      for (int v = g.n - 1; v >= 0; --v) {
        if (g.adj[v][v] != 0) continue;
        if (g.in_degree(v) != 1 && g.out_degree(v) != 1) continue;
        g = jump(g, v);
        changed = true;
        break;
      }
    }
    return g;
  };
  std::mt19937_64 rng(71);
  int tested = 0;
  while (tested < 200) {
    MultiDigraph g = fixtures::random_digraph_small_phi(rng, 6, 2, 12);
    ++tested;
    auto [low, log] = reduce(g);
    MultiDigraph high = reduce_highest_first(g);
    CHECK(phi_isomorphic(low, high));
    CHECK(phi_isomorphic(low, g));
  }
}

TEST_CASE("to_cubic output is cubic and phi-invariant") {
  MultiDigraph cubic_b4 = to_cubic(bouquet(4));
  for (int v = 0; v < cubic_b4.n; ++v)
    CHECK(cubic_b4.in_degree(v) + cubic_b4.out_degree(v) == 3);
  CHECK(are_isomorphic(phi(cubic_b4).h, complete_graph(4)));

  std::mt19937_64 rng(73);
  int tested = 0;
  while (tested < 150) {
    MultiDigraph g = fixtures::random_digraph_small_phi(rng, 4, 2, 10);
    // need a strongly connected reduced graph with degrees >= 3
    if (strongly_connected_components(g).size() != 1) continue;
    auto [reduced, log] = reduce(g);
    if (reduced.n == 0) continue;
    bool degrees_ok = true;
    for (int v = 0; v < reduced.n; ++v)
      if (reduced.in_degree(v) + reduced.out_degree(v) < 3 || reduced.in_degree(v) == 0 ||
          reduced.out_degree(v) == 0)
        degrees_ok = false;
    if (!degrees_ok) continue;
    ++tested;
    MultiDigraph cubic = to_cubic(reduced);
    for (int v = 0; v < cubic.n; ++v) CHECK(cubic.in_degree(v) + cubic.out_degree(v) == 3);
    CHECK(build_cycle_catalog(cubic).total() == build_cycle_catalog(reduced).total());
    CHECK(phi_isomorphic(cubic, reduced));
  }
}

TEST_CASE("glue of two 2-bouquets is the 4-bouquet") {
  MultiDigraph glued = glue(bouquet(2), 0, bouquet(2), 0);
  CHECK(glued == bouquet(4));
  CHECK(are_isomorphic(phi(glued).h, complete_graph(4)));
}

TEST_CASE("glue realizes the join construction") {
  std::mt19937_64 rng(79);
  int tested = 0;
  while (tested < 200) {
    MultiDigraph g1 = fixtures::random_digraph_small_phi(rng, 4, 2, 6);
    MultiDigraph g2 = fixtures::random_digraph_small_phi(rng, 4, 2, 6);
    int v1 = static_cast<int>(rng() % g1.n);
    int v2 = static_cast<int>(rng() % g2.n);
    ++tested;
    PhiResult p1 = phi(g1);
    PhiResult p2 = phi(g2);
    MultiDigraph glued = glue(g1, v1, g2, v2);
    auto glued_catalog = build_cycle_catalog(glued);
    // no simple cycle created or destroyed
    CHECK(glued_catalog.total() == build_cycle_catalog(g1).total() + build_cycle_catalog(g2).total());

    // expected dependency graph: disjoint union plus all edges between
    // cycles through v1 and cycles through v2
    PhiResult expected = phi_of_disjoint_union({p1, p2});
    int offset = p1.h.vertex_count();
    for (int a = 0; a < p1.h.vertex_count(); ++a) {
      if (!p1.labels[a].contains(v1)) continue;
      for (int b = 0; b < p2.h.vertex_count(); ++b)
        if (p2.labels[b].contains(v2)) expected.h.add_edge(a, offset + b);
    }
    CHECK(are_isomorphic(phi(glued).h, expected.h, 14));
  }
}
