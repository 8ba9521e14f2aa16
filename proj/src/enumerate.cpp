#include "cyclemonoid/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "cyclemonoid/graph6.hpp"
#include "cyclemonoid/isomorphism.hpp"

namespace cyclemonoid {

namespace {

std::vector<SimpleGraph> extend_by_one_vertex(const std::vector<SimpleGraph>& smaller, int n) {
  std::set<std::string> seen;
  std::vector<std::string> keys;
  for (const SimpleGraph& g : smaller) {
    for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << (n - 1)); ++attach) {
      SimpleGraph h(n);
      for (auto [u, v] : g.edges()) h.add_edge(u, v);
      for (int v = 0; v < n - 1; ++v)
        if ((attach >> v) & 1) h.add_edge(n - 1, v);
      std::string key = canonical_form(h);
      if (seen.insert(key).second) keys.push_back(key);
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<SimpleGraph> out;
  out.reserve(keys.size());
  for (const std::string& k : keys) out.push_back(parse_graph6(k));
  return out;
}

}  // namespace

std::vector<SimpleGraph> generate_all_graphs(int n) {
  if (n < 0) throw std::invalid_argument("generate_all_graphs: n >= 0");
  if (n == 0) return {};
  std::vector<SimpleGraph> cur{SimpleGraph(1)};
  for (int k = 2; k <= n; ++k) cur = extend_by_one_vertex(cur, k);
  return cur;
}

bool is_connected(const SimpleGraph& h) {
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

std::vector<SimpleGraph> connected_components(const SimpleGraph& h) {
  int n = h.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (comp[u] < 0 && h.adjacent(v, u)) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  std::vector<VertexSet> members(ncomp);
  for (int v = 0; v < n; ++v) members[comp[v]].insert(v);
  std::vector<SimpleGraph> out;
  for (const VertexSet& s : members) out.push_back(induced_subgraph(h, s));
  return out;
}

std::vector<SimpleGraph> generate_connected_graphs(int n) {
  std::vector<SimpleGraph> out;
  for (const SimpleGraph& g : generate_all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

std::vector<SimpleGraph> generate_trees(int n) {
  if (n <= 0) return {};
  std::vector<SimpleGraph> cur{SimpleGraph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<std::string> keys;
    for (const SimpleGraph& t : cur) {
      for (int v = 0; v < k - 1; ++v) {
        SimpleGraph h(k);
        for (auto [a, b] : t.edges()) h.add_edge(a, b);
        h.add_edge(k - 1, v);
        std::string key = canonical_form(h);
        if (seen.insert(key).second) keys.push_back(key);
      }
    }
    std::sort(keys.begin(), keys.end());
    cur.clear();
    for (const std::string& key : keys) cur.push_back(parse_graph6(key));
  }
  return cur;
}

RealizabilityVerdict realize_components(const SimpleGraph& h, const RealizeBudgets& budgets) {
  std::vector<SimpleGraph> comps = connected_components(h);
  if (comps.size() <= 1) return realize(h, budgets);
  RealizabilityVerdict combined;
  combined.kind = RealizabilityVerdict::Kind::Realizable;
  MultiDigraph witness(0);
  for (const SimpleGraph& comp : comps) {
    RealizabilityVerdict v = realize(comp, budgets);
    combined.stats.covers_tried += v.stats.covers_tried;
    combined.stats.solver_nodes += v.stats.solver_nodes;
    if (v.kind == RealizabilityVerdict::Kind::Unrealizable) {
      combined.kind = RealizabilityVerdict::Kind::Unrealizable;
      combined.reason = v.reason;
      return combined;
    }
    if (v.kind == RealizabilityVerdict::Kind::Undecided) {
      combined.kind = RealizabilityVerdict::Kind::Undecided;
      if (combined.stats.budget_exhausted_at.empty())
        combined.stats.budget_exhausted_at = v.stats.budget_exhausted_at;
      continue;
    }
    // disjoint union of witnesses
    MultiDigraph merged(witness.n + v.witness.n);
    for (int i = 0; i < witness.n; ++i)
      for (int j = 0; j < witness.n; ++j) merged.adj[i][j] = witness.adj[i][j];
    for (int i = 0; i < v.witness.n; ++i)
      for (int j = 0; j < v.witness.n; ++j)
        merged.adj[witness.n + i][witness.n + j] = v.witness.adj[i][j];
    witness = std::move(merged);
  }
  if (combined.kind == RealizabilityVerdict::Kind::Realizable) combined.witness = witness;
  return combined;
}

namespace {

struct Classified {
  std::string graph6;
  std::string canonical;
  RealizabilityVerdict verdict;
  bool from_cache = false;
};

Classified classify_line(const std::string& line, const RealizeBudgets& budgets) {
  Classified c;
  c.graph6 = line;
  SimpleGraph h = parse_graph6(line);
  c.canonical = canonical_form(h);
  c.verdict = realize_components(h, budgets);
  return c;
}

}  // namespace

EnumerationReport enumerate_corpus(const std::vector<std::string>& graph6_lines, int n,
                                   const EnumerateOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.n = n;
  report.graphs_seen = static_cast<std::int64_t>(graph6_lines.size());

  VerdictCache cache = opts.cache_path.empty() ? VerdictCache() : VerdictCache(opts.cache_path);

  struct Slot {
    std::string verdict;
    std::string reason;
    Json record;
    bool from_cache = false;
  };
  std::vector<Slot> slots(graph6_lines.size());

  // Pre-pass: resolve cache hits single-threaded (the cache map is shared),
  // leaving the misses for the pool.
  std::vector<std::size_t> missing;
  std::int64_t hit_index = 0;
  for (std::size_t i = 0; i < graph6_lines.size(); ++i) {
    SimpleGraph h = parse_graph6(graph6_lines[i]);
    std::string canonical = canonical_form(h);
    auto cached = cache.get(canonical);
    if (cached) {
      bool audit = opts.audit_every > 0 && (hit_index++ % opts.audit_every) == 0;
      if (audit) {
        Classified fresh = classify_line(graph6_lines[i], opts.budgets);
        Json fresh_rec = verdict_to_json(graph6_lines[i], fresh.canonical, fresh.verdict);
        if (fresh_rec.at("verdict") != cached->at("verdict"))
          throw std::runtime_error("verdict cache audit mismatch for " + canonical);
      }
      slots[i].verdict = cached->at("verdict").get<std::string>();
      if (cached->contains("reason")) slots[i].reason = cached->at("reason").get<std::string>();
      slots[i].from_cache = true;
      ++report.cache_hits;
    } else {
      missing.push_back(i);
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;
  auto worker = [&]() {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= missing.size()) break;
      std::size_t i = missing[k];
      try {
        Classified c = classify_line(graph6_lines[i], opts.budgets);
        Slot& slot = slots[i];
        slot.record = verdict_to_json(c.graph6, c.canonical, c.verdict);
        slot.verdict = slot.record.at("verdict").get<std::string>();
        if (slot.record.contains("reason"))
          slot.reason = slot.record.at("reason").get<std::string>();
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty())
          first_error = graph6_lines[i] + ": " + e.what();
      }
    }
  };
  int nthreads = std::max(1, opts.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (!first_error.empty()) throw std::runtime_error("enumerate: " + first_error);

  // Single writer: persist new records in input order.
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].from_cache && !slots[i].record.is_null())
      cache.insert(slots[i].record.at("canonical").get<std::string>(), slots[i].record);
  }

  for (const Slot& slot : slots) {
    if (slot.verdict == "realizable") ++report.realizable;
    else if (slot.verdict == "unrealizable") {
      ++report.unrealizable;
      ++report.by_reason[slot.reason];
    } else {
      ++report.undecided;
    }
  }
  report.wall_millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string report_table(const std::vector<EnumerationReport>& reports) {
  std::ostringstream out;
  out << "  n    seen  realizable  unrealizable  undecided\n";
  for (const auto& r : reports) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%3d %7lld %11lld %13lld %10lld\n", r.n,
                  static_cast<long long>(r.graphs_seen), static_cast<long long>(r.realizable),
                  static_cast<long long>(r.unrealizable), static_cast<long long>(r.undecided));
    out << buf;
  }
  return out.str();
}

Json report_json(const EnumerationReport& r) {
  Json j;
  j["n"] = r.n;
  j["graphs_seen"] = r.graphs_seen;
  j["realizable"] = r.realizable;
  j["unrealizable"] = r.unrealizable;
  j["undecided"] = r.undecided;
  j["by_reason"] = r.by_reason;
  j["stats"] = {{"wall_millis", r.wall_millis}, {"cache_hits", r.cache_hits}};
  return j;
}

}  // namespace cyclemonoid
