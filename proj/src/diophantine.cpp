#include "cyclemonoid/diophantine.hpp"

#include <algorithm>

namespace cyclemonoid {

DiophantineSystem build_system(const SimpleGraph& h, const CliqueCover& cover) {
  if (!cover.valid_for(h)) throw std::invalid_argument("build_system: cover is not valid for H");
  int n = static_cast<int>(cover.cliques.size());
  if (n > 30) throw std::length_error("build_system: too many cliques");
  DiophantineSystem sys;
  sys.n = n;
  sys.target.assign(std::size_t{1} << n, 0);
  for (int x = 0; x < h.vertex_count(); ++x) {
    std::uint64_t member_of = 0;
    for (int i = 0; i < n; ++i)
      if (cover.cliques[i].contains(x)) member_of |= std::uint64_t{1} << i;
    ++sys.target[member_of];  // member_of != 0 since the cover hits every vertex
  }
  for (std::int64_t t : sys.target) sys.bound = std::max(sys.bound, t);
  return sys;
}

namespace {

struct Arc {
  int from, to;
  int pair_id;  // index of the unordered pair {from, to} in lex order
};

struct Monomial {
  std::vector<Arc> arcs;
  int last_pair;  // max pair_id; the monomial is fully assigned after that step
};

struct Equation {
  std::uint64_t w_mask;
  std::int64_t target;
  int last_pair;
  std::vector<Monomial> monomials;
};

struct Solver {
  const DiophantineSystem& sys;
  const SolveOptions& opts;
  int n;
  std::int64_t bound;
  std::vector<std::vector<std::int64_t>> m;
  std::vector<std::pair<int, int>> pairs;  // lex ordered
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> candidates;
  std::vector<Equation> equations;
  std::vector<std::vector<int>> eqs_touching_pair;
  std::int64_t nodes = 0;
  bool budget_hit = false;
  bool found_any = false;
  bool stop = false;
  SolutionMatrix first_solution;

  Solver(const DiophantineSystem& s, const SolveOptions& o)
      : sys(s), opts(o), n(s.n), bound(s.bound), m(s.n, std::vector<std::int64_t>(s.n, 0)) {}

  int pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  void prepare() {
    for (int i = 0; i < n; ++i) m[i][i] = sys.target[std::size_t{1} << i];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    // Joint candidate values (m_ij, m_ji): their product is pinned by the
    // pair target, ascending lexicographic order.
    candidates.resize(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      std::int64_t t = sys.target[(std::uint64_t{1} << i) | (std::uint64_t{1} << j)];
      for (std::int64_t a = 0; a <= bound; ++a) {
        if (t == 0) {
          if (a == 0) {
            for (std::int64_t b = 0; b <= bound; ++b) candidates[p].emplace_back(a, b);
          } else {
            candidates[p].emplace_back(a, 0);
          }
        } else if (a > 0 && t % a == 0 && t / a <= bound) {
          candidates[p].emplace_back(a, t / a);
        }
      }
    }

    for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
      if (__builtin_popcountll(w) < 3) continue;
      Equation eq;
      eq.w_mask = w;
      eq.target = sys.target[w];
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if ((w >> v) & 1) verts.push_back(v);
      int root = verts[0];
      std::vector<int> rest(verts.begin() + 1, verts.end());
      std::sort(rest.begin(), rest.end());
      do {
        Monomial mono;
        int prev = root;
        for (int v : rest) {
          mono.arcs.push_back({prev, v, pair_index(prev, v)});
          prev = v;
        }
        mono.arcs.push_back({prev, root, pair_index(prev, root)});
        mono.last_pair = 0;
        for (const Arc& a : mono.arcs) mono.last_pair = std::max(mono.last_pair, a.pair_id);
        eq.monomials.push_back(std::move(mono));
      } while (std::next_permutation(rest.begin(), rest.end()));
      eq.last_pair = 0;
      for (const Monomial& mono : eq.monomials) eq.last_pair = std::max(eq.last_pair, mono.last_pair);
      equations.push_back(std::move(eq));
    }
    // Deterministic evaluation order: increasing subset size, then mask.
    std::stable_sort(equations.begin(), equations.end(), [](const Equation& a, const Equation& b) {
      int ca = __builtin_popcountll(a.w_mask), cb = __builtin_popcountll(b.w_mask);
      return ca != cb ? ca < cb : a.w_mask < b.w_mask;
    });
    eqs_touching_pair.assign(pairs.size(), {});
    for (std::size_t e = 0; e < equations.size(); ++e)
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [i, j] = pairs[p];
        if (((equations[e].w_mask >> i) & 1) && ((equations[e].w_mask >> j) & 1))
          eqs_touching_pair[p].push_back(static_cast<int>(e));
      }
  }

  // Feasibility of one equation given that pairs 0..assigned_up_to have
  // values. Sums are clamped at target+1; targets are at most |V_H| so no
  // overflow is possible. Rejects when completed monomials already exceed
  // the target, when a complete equation misses it, or when bound-maximal
  // completions of the open monomials cannot reach it.
  bool feasible(const Equation& eq, int assigned_up_to) const {
    const std::int64_t cap = eq.target + 1;
    std::int64_t sum_complete = 0;
    std::int64_t max_total = 0;
    for (const Monomial& mono : eq.monomials) {
      std::int64_t prod = 1;
      int open = 0;
      bool zero = false;
      for (const Arc& a : mono.arcs) {
        if (a.pair_id <= assigned_up_to) {
          std::int64_t v = m[a.from][a.to];
          if (v == 0) {
            zero = true;
            break;
          }
          prod = std::min(cap, prod * std::min(v, cap));
        } else {
          ++open;
        }
      }
      if (zero) continue;
      if (open == 0) {
        sum_complete += prod;
        if (sum_complete > eq.target) return false;
        max_total = std::min(cap, max_total + prod);
      } else {
        std::int64_t pot = prod;
        for (int k = 0; k < open && pot < cap; ++k)
          pot = std::min(cap, pot * std::max<std::int64_t>(bound, 1));
        max_total = std::min(cap, max_total + pot);
      }
    }
    if (eq.last_pair <= assigned_up_to) return sum_complete == eq.target;
    return max_total >= eq.target;
  }

  bool check_pair(int p) const {
    for (int e : eqs_touching_pair[p])
      if (!feasible(equations[e], p)) return false;
    return true;
  }

  void assign(std::size_t p) {
    if (stop || budget_hit) return;
    if (p == pairs.size()) {
      found_any = true;
      if (first_solution.empty()) first_solution = m;
      if (opts.on_solution) {
        if (!opts.on_solution(m)) stop = true;
      } else {
        stop = true;
      }
      return;
    }
    auto [i, j] = pairs[p];
    for (auto [a, b] : candidates[p]) {
      if (++nodes > opts.node_budget) {
        budget_hit = true;
        break;
      }
      m[i][j] = a;
      m[j][i] = b;
      if (check_pair(static_cast<int>(p))) {
        assign(p + 1);
        if (stop || budget_hit) break;
      }
    }
    m[i][j] = 0;
    m[j][i] = 0;
  }
};

}  // namespace

SolveOutcome solve_system(const DiophantineSystem& sys, const SolveOptions& opts) {
  SolveOutcome out{SolveOutcome::Status::Unsat, {}, 0};
  if (sys.n == 0) {
    out.status = SolveOutcome::Status::Sat;  // empty system, empty solution
    return out;
  }
  Solver solver(sys, opts);
  solver.prepare();
  if (solver.pairs.empty()) {
    solver.found_any = true;
    solver.first_solution = solver.m;
    if (opts.on_solution) opts.on_solution(solver.m);
  } else {
    solver.assign(0);
  }
  out.nodes = solver.nodes;
  if (solver.found_any) {
    out.status = SolveOutcome::Status::Sat;
    out.solution = solver.first_solution;
  } else if (solver.budget_hit) {
    out.status = SolveOutcome::Status::BudgetExhausted;
  }
  return out;
}

}  // namespace cyclemonoid
