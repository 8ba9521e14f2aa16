#include "cyclemonoid/invariants.hpp"

#include <algorithm>

namespace cyclemonoid {

namespace {

// Fraction-free (Bareiss) elimination over any exact ring with division.
template <typename Ring, typename Div>
Ring bareiss_det(std::vector<std::vector<Ring>> m, const Ring& one, const Ring& zero, Div div) {
  int n = static_cast<int>(m.size());
  if (n == 0) return one;
  Ring prev = one;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == zero) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!(m[r][k] == zero)) {
          pivot = r;
          break;
        }
      if (pivot < 0) return zero;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  Ring det = m[n - 1][n - 1];
  if (sign < 0) det = zero - det;
  return det;
}

std::vector<std::vector<BigInt>> i_minus_a(const MultiDigraph& g) {
  std::vector<std::vector<BigInt>> m(g.n, std::vector<BigInt>(g.n, 0));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) m[i][j] = BigInt((i == j ? 1 : 0) - g.adj[i][j]);
  return m;
}

}  // namespace

BigInt det_I_minus_A(const MultiDigraph& g) {
  return bareiss_det<BigInt>(i_minus_a(g), 1, 0,
                             [](const BigInt& a, const BigInt& b) { return BigInt(a / b); });
}

IntPolynomial det_I_minus_zA(const MultiDigraph& g) {
  std::vector<std::vector<IntPolynomial>> m(g.n, std::vector<IntPolynomial>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (i == j) m[i][j] = IntPolynomial::constant(1) - IntPolynomial::monomial(1, g.adj[i][j]);
      else m[i][j] = IntPolynomial() - IntPolynomial::monomial(1, g.adj[i][j]);
    }
  return bareiss_det<IntPolynomial>(std::move(m), IntPolynomial::constant(1), IntPolynomial(),
                                    [](const IntPolynomial& a, const IntPolynomial& b) {
                                      return exact_div(a, b);
                                    });
}

BigInt perm_I_plus_A(const MultiDigraph& g) {
  int n = g.n;
  if (n > 20) throw std::length_error("perm_I_plus_A: n <= 20 required");
  if (n == 0) return 1;
  // Ryser with Gray-code subset updates over columns.
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = BigInt((i == j ? 1 : 0) + g.adj[i][j]);
  std::vector<BigInt> row_sum(n, 0);
  BigInt total = 0;
  std::uint32_t prev_gray = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    std::uint32_t gray = s ^ (s >> 1);
    std::uint32_t changed = gray ^ prev_gray;
    int col = __builtin_ctz(changed);
    bool added = gray & changed;
    for (int i = 0; i < n; ++i) {
      if (added) row_sum[i] += m[i][col];
      else row_sum[i] -= m[i][col];
    }
    prev_gray = gray;
    BigInt prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if ((n - __builtin_popcount(gray)) % 2 == 0) total += prod;
    else total -= prod;
  }
  return total;
}

namespace {

// Independence polynomial by branching on a highest-degree vertex; blocks of
// pairwise nonadjacent leftovers contribute (1+z)^k in one step.
IntPolynomial independence_poly(const std::vector<std::uint64_t>& closed_nbr, std::uint64_t avail) {
  int best = -1, best_deg = -1;
  for (std::uint64_t b = avail; b; b &= b - 1) {
    int v = __builtin_ctzll(b);
    int d = __builtin_popcountll(closed_nbr[v] & avail) - 1;
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  }
  if (best_deg <= 0) {
    // all remaining vertices independent
    int k = __builtin_popcountll(avail);
    IntPolynomial p = IntPolynomial::constant(1);
    IntPolynomial one_plus_z(std::vector<BigInt>{1, 1});
    for (int i = 0; i < k; ++i) p = p * one_plus_z;
    return p;
  }
  IntPolynomial without = independence_poly(closed_nbr, avail & ~(std::uint64_t{1} << best));
  IntPolynomial with = independence_poly(closed_nbr, avail & ~closed_nbr[best]);
  return without + IntPolynomial::monomial(1) * with;
}

}  // namespace

IntPolynomial sa_hike_polynomial(const SimpleGraph& h) {
  int n = h.vertex_count();
  if (n > 30) throw std::length_error("sa_hike_polynomial: n <= 30 required");
  std::vector<std::uint64_t> closed_nbr(n);
  for (int v = 0; v < n; ++v) closed_nbr[v] = h.neighbors_mask(v) | (std::uint64_t{1} << v);
  return independence_poly(closed_nbr, VertexSet::full(n).bits);
}

IntPolynomial sa_hike_polynomial_from_catalog(const CycleCatalog& catalog) {
  // Cycles with the same vertex set are mutually dependent, so independent
  // sets pick at most one cycle per distinct W; each pick has N_W choices.
  std::vector<std::pair<std::uint64_t, std::int64_t>> groups;
  for (const auto& [w, count] : catalog.counts) groups.emplace_back(w.bits, count);
  int k = static_cast<int>(groups.size());
  if (k > 63) throw std::length_error("sa_hike_polynomial_from_catalog: too many distinct vertex sets");
  std::vector<std::uint64_t> conflict(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (groups[a].first & groups[b].first) conflict[a] |= std::uint64_t{1} << b;

  // Branch on groups like vertices, weighting a pick by N_W.
  struct Rec {
    const std::vector<std::pair<std::uint64_t, std::int64_t>>& groups;
    const std::vector<std::uint64_t>& conflict;
    IntPolynomial operator()(std::uint64_t avail) const {
      int best = -1, best_deg = -1;
      for (std::uint64_t b = avail; b; b &= b - 1) {
        int v = __builtin_ctzll(b);
        int d = __builtin_popcountll(conflict[v] & avail) - 1;
        if (d > best_deg) {
          best_deg = d;
          best = v;
        }
      }
      if (best < 0) return IntPolynomial::constant(1);
      if (best_deg <= 0) {
        IntPolynomial p = IntPolynomial::constant(1);
        for (std::uint64_t b = avail; b; b &= b - 1) {
          int v = __builtin_ctzll(b);
          p = p * IntPolynomial(std::vector<BigInt>{1, groups[v].second});
        }
        return p;
      }
      IntPolynomial without = (*this)(avail & ~(std::uint64_t{1} << best));
      IntPolynomial with = (*this)(avail & ~conflict[best]);
      return without + IntPolynomial(std::vector<BigInt>{0, groups[best].second}) * with;
    }
  };
  std::uint64_t all = k == 63 ? 0x7fffffffffffffffull : (std::uint64_t{1} << k) - 1;
  return Rec{groups, conflict}(all);
}

TruncatedSeries hike_gf_by_omega(const SimpleGraph& h, int order) {
  IntPolynomial ind = sa_hike_polynomial(h);
  TruncatedSeries denom(order);
  for (int d = 0; d <= order; ++d) {
    denom.coeffs[d] = ind.at(d);
    if (d % 2 == 1) denom.coeffs[d] = -denom.coeffs[d];
  }
  return denom.inverse();
}

bool is_valid_normal_form(const SimpleGraph& h, const NormalFormTrace& t) {
  if (t.layers.empty()) return false;
  auto independent = [&](VertexSet s) {
    auto v = s.members();
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        if (h.adjacent(v[a], v[b])) return false;
    return true;
  };
  for (const VertexSet& layer : t.layers)
    if (layer.empty() || !independent(layer)) return false;
  for (std::size_t i = 1; i < t.layers.size(); ++i) {
    for (int v : t.layers[i].members()) {
      std::uint64_t dep = h.neighbors_mask(v) | (std::uint64_t{1} << v);
      if ((dep & t.layers[i - 1].bits) == 0) return false;
    }
  }
  return true;
}

namespace {

struct TraceEnumerator {
  const SimpleGraph& h;
  int order;
  std::int64_t budget;
  std::vector<std::uint64_t> dep;             // closed dependence neighborhoods
  std::vector<std::uint64_t> independent_sets;  // nonempty, any size
  std::vector<BigInt> trace_counts;
  std::vector<BigInt> walk_counts;
  std::vector<int> word;  // current trace flattened, layer by layer
  std::int64_t seen = 0;

  TraceEnumerator(const SimpleGraph& graph, int d, std::int64_t b)
      : h(graph), order(d), budget(b), trace_counts(d + 1, 0), walk_counts(d + 1, 0) {
    int n = h.vertex_count();
    if (n > 20) throw std::length_error("count_traces_by_omega: n <= 20 required");
    dep.resize(n);
    for (int v = 0; v < n; ++v) dep[v] = h.neighbors_mask(v) | (std::uint64_t{1} << v);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      bool ok = true;
      for (std::uint64_t b1 = s; ok && b1; b1 &= b1 - 1) {
        int v = __builtin_ctzll(b1);
        ok = (h.neighbors_mask(v) & s) == 0;
      }
      if (ok) independent_sets.push_back(s);
    }
  }

  // First layer of the Cartier-Foata normal form of the reversed word; a
  // singleton means the original trace has a unique maximal letter, i.e. is
  // a walk.
  bool reversed_first_layer_singleton() const {
    int len = static_cast<int>(word.size());
    int first_layer = 0;
    for (int t = len - 1; t >= 0; --t) {
      int level = 1;
      for (int s = len - 1; s > t; --s)
        if ((dep[word[s]] >> word[t]) & 1) level = 2;  // any earlier dependent letter
      if (level == 1 && ++first_layer > 1) return false;
    }
    return first_layer == 1;
  }

  void record() {
    if (++seen > budget) throw TraceBudgetExceeded();
    int omega = static_cast<int>(word.size());
    trace_counts[omega] += 1;
    if (reversed_first_layer_singleton()) walk_counts[omega] += 1;
  }

  void extend(std::uint64_t prev_layer, int used) {
    for (std::uint64_t s : independent_sets) {
      int size = __builtin_popcountll(s);
      if (used + size > order) continue;
      if (prev_layer != 0) {
        bool supported = true;
        for (std::uint64_t b = s; supported && b; b &= b - 1)
          supported = (dep[__builtin_ctzll(b)] & prev_layer) != 0;
        if (!supported) continue;
      }
      for (std::uint64_t b = s; b; b &= b - 1) word.push_back(__builtin_ctzll(b));
      record();
      extend(s, used + size);
      word.resize(word.size() - size);
    }
  }
};

}  // namespace

TruncatedSeries count_traces_by_omega(const SimpleGraph& h, int order, std::int64_t budget) {
  TraceEnumerator e(h, order, budget);
  e.extend(0, 0);
  TruncatedSeries out(order);
  out.coeffs = e.trace_counts;
  out.coeffs[0] = 1;  // empty trace
  return out;
}

TruncatedSeries walk_gf_by_omega(const SimpleGraph& h, int order, std::int64_t budget) {
  TraceEnumerator e(h, order, budget);
  e.extend(0, 0);
  TruncatedSeries out(order);
  out.coeffs = e.walk_counts;
  out.coeffs[0] = 1;  // the empty hike is vacuously a walk
  return out;
}

RationalSeries walk_resolvent_gf(const MultiDigraph& g, int vertex, int order) {
  g.check_vertex(vertex);
  if (g.n > 20) throw std::length_error("walk_resolvent_gf: n <= 20 required");
  RationalSeries out;
  out.den = det_I_minus_zA(g);
  MultiDigraph minor(g.n - 1);
  for (int i = 0; i < g.n; ++i) {
    if (i == vertex) continue;
    for (int j = 0; j < g.n; ++j) {
      if (j == vertex) continue;
      minor.adj[i < vertex ? i : i - 1][j < vertex ? j : j - 1] = g.adj[i][j];
    }
  }
  out.num = det_I_minus_zA(minor);
  out.series = series_of_rational(out.num, out.den, order);
  return out;
}

namespace {

struct LoopErasedWalker {
  const MultiDigraph& g;
  int target, max_len, order;
  std::int64_t budget;
  std::vector<BigInt> counts;
  std::vector<int> le_path;
  std::vector<int> pos;  // vertex -> index on le_path, or -1
  std::int64_t nodes = 0;

  LoopErasedWalker(const MultiDigraph& graph, int to, int len, int d, std::int64_t b)
      : g(graph), target(to), max_len(len), order(d), budget(b), counts(d + 1, 0),
        pos(graph.n, -1) {}

  void dfs(int v, int length, int erasures, const BigInt& weight) {
    if (++nodes > budget) throw std::runtime_error("loop_erased_omega_gf: walk budget exceeded");
    if (v == target && erasures <= order) counts[erasures] += weight;
    if (length == max_len) return;
    for (int u = 0; u < g.n; ++u) {
      std::int64_t mult = g.adj[v][u];
      if (mult <= 0) continue;
      if (pos[u] >= 0) {
        // closing a loop: erase everything after u's position
        std::vector<int> suffix(le_path.begin() + pos[u] + 1, le_path.end());
        le_path.resize(pos[u] + 1);
        for (int w : suffix) pos[w] = -1;
        dfs(u, length + 1, erasures + 1, weight * mult);
        for (int w : suffix) {
          pos[w] = static_cast<int>(le_path.size());
          le_path.push_back(w);
        }
      } else {
        pos[u] = static_cast<int>(le_path.size());
        le_path.push_back(u);
        dfs(u, length + 1, erasures, weight * mult);
        le_path.pop_back();
        pos[u] = -1;
      }
    }
  }
};

}  // namespace

LoopErasedSeries loop_erased_omega_gf(const MultiDigraph& g, int from, int to, int max_len,
                                      int order, std::int64_t budget) {
  g.check_vertex(from);
  g.check_vertex(to);
  LoopErasedWalker walker(g, to, max_len, order, budget);
  walker.pos[from] = 0;
  walker.le_path.push_back(from);
  walker.dfs(from, 0, 0, 1);

  LoopErasedSeries out;
  out.series = TruncatedSeries(order);
  out.series.coeffs = walker.counts;
  out.max_len = max_len;
  // Every erased loop is a simple cycle, so a walk with k erasures has
  // length at most (loop-erased path length) + k * (longest simple cycle).
  std::int64_t lambda = 0;
  for (const auto& [w, c] : build_cycle_catalog(g).counts)
    lambda = std::max<std::int64_t>(lambda, w.count());
  int base = from == to ? 0 : std::max(0, g.n - 1);
  if (lambda == 0) {
    out.length_complete_through = order;
  } else {
    out.length_complete_through =
        std::min<std::int64_t>(order, std::max<std::int64_t>(-1, (max_len - base) / lambda));
  }
  return out;
}

}  // namespace cyclemonoid
