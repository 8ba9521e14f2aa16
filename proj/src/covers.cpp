#include "cyclemonoid/covers.hpp"

#include <algorithm>

namespace cyclemonoid {

bool CliqueCover::valid_for(const SimpleGraph& h) const {
  int n = h.vertex_count();
  std::uint64_t covered_vertices = 0;
  for (const VertexSet& k : cliques) {
    auto verts = k.members();
    if (verts.empty()) return false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (verts[i] >= n) return false;
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (!h.adjacent(verts[i], verts[j])) return false;
    }
    covered_vertices |= k.bits;
  }
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = 0; j < cliques.size(); ++j)
      if (i != j && cliques[i].subset_of(cliques[j])) return false;
  if (covered_vertices != VertexSet::full(n).bits) return false;
  for (auto [u, v] : h.edges()) {
    bool hit = false;
    for (const VertexSet& k : cliques)
      if (k.contains(u) && k.contains(v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

namespace {

// Coverage items in branching order: isolated-vertex items first (rare),
// then edges ordered lexicographically.
struct Items {
  std::vector<VertexSet> need;  // item = vertex pair mask (or singleton)

  explicit Items(const SimpleGraph& h) {
    for (int v = 0; v < h.vertex_count(); ++v)
      if (h.degree(v) == 0) need.push_back(VertexSet::single(v));
    for (auto [u, v] : h.edges()) need.push_back(VertexSet::single(u) | VertexSet::single(v));
  }
};

struct CoverSearch {
  const std::vector<VertexSet>& cliques;
  const Items& items;
  int target_size;
  const std::function<bool(const CliqueCover&)>& emit;

  std::vector<int> chosen;
  std::vector<char> banned;
  std::int64_t emitted = 0;
  bool stopped = false;

  CoverSearch(const std::vector<VertexSet>& cl, const Items& it, int size,
              const std::function<bool(const CliqueCover&)>& cb)
      : cliques(cl), items(it), target_size(size), emit(cb), banned(cl.size(), 0) {}

  int first_uncovered() const {
    for (std::size_t i = 0; i < items.need.size(); ++i) {
      const VertexSet item = items.need[i];
      bool covered = false;
      for (int c : chosen)
        if (item.subset_of(cliques[c])) {
          covered = true;
          break;
        }
      if (!covered) return static_cast<int>(i);
    }
    return -1;
  }

  bool antichain_with_chosen(int cand) const {
    for (int c : chosen)
      if (cliques[c].subset_of(cliques[cand]) || cliques[cand].subset_of(cliques[c])) return false;
    return true;
  }

  void run() {
    dfs();
  }

  void dfs() {
    if (stopped) return;
    int item = first_uncovered();
    if (item < 0 && static_cast<int>(chosen.size()) == target_size) {
      CliqueCover cover;
      for (int c : chosen) cover.cliques.push_back(cliques[c]);
      ++emitted;
      if (!emit(cover)) stopped = true;
      return;
    }
    if (static_cast<int>(chosen.size()) >= target_size) return;
    std::vector<int> local_bans;
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      if (banned[c]) continue;
      if (item >= 0 && !items.need[item].subset_of(cliques[c])) continue;
      if (item < 0) {
        // Padding phase: everything is covered already, extend with any
        // compatible clique to reach the target size.
        bool already = std::find(chosen.begin(), chosen.end(), static_cast<int>(c)) != chosen.end();
        if (already) continue;
      }
      if (!antichain_with_chosen(static_cast<int>(c))) continue;
      chosen.push_back(static_cast<int>(c));
      dfs();
      chosen.pop_back();
      if (stopped) break;
      banned[c] = 1;  // later siblings must not reuse this clique
      local_bans.push_back(static_cast<int>(c));
    }
    for (int c : local_bans) banned[c] = 0;
  }
};

std::vector<VertexSet> cliques_in_branch_order(const SimpleGraph& h) {
  std::vector<VertexSet> cliques = enumerate_cliques(h);
  std::sort(cliques.begin(), cliques.end(), [](VertexSet a, VertexSet b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca > cb : a.bits < b.bits;
  });
  return cliques;
}

}  // namespace

CoverEnumerationResult enumerate_clique_covers(const SimpleGraph& h, int size_cap,
                                               const std::function<bool(const CliqueCover&)>& emit) {
  if (size_cap < 1) throw std::invalid_argument("enumerate_clique_covers: size_cap must be >= 1");
  if (h.vertex_count() > 64) throw std::length_error("enumerate_clique_covers: n <= 64 required");
  CoverEnumerationResult result;
  if (h.vertex_count() == 0) {
    result.exhausted = true;
    return result;
  }
  std::vector<VertexSet> cliques = cliques_in_branch_order(h);
  Items items(h);
  for (int size = 1; size <= size_cap; ++size) {
    CoverSearch search(cliques, items, size, emit);
    search.run();
    result.emitted += search.emitted;
    if (search.stopped) return result;  // consumer stopped; not exhausted
  }
  result.exhausted = true;
  return result;
}

int minimum_clique_cover_size(const SimpleGraph& h) {
  if (h.vertex_count() == 0) return 0;
  for (int size = 1; size <= h.vertex_count(); ++size) {
    bool found = false;
    enumerate_clique_covers(h, size, [&](const CliqueCover&) {
      found = true;
      return false;
    });
    if (found) return size;
  }
  return h.vertex_count();  // singletons always cover an edgeless graph
}

}  // namespace cyclemonoid
