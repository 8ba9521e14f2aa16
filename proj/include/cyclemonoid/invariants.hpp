#pragma once

#include <cstdint>
#include <vector>

#include "cyclemonoid/cycles.hpp"
#include "cyclemonoid/graph.hpp"
#include "cyclemonoid/polynomial.hpp"

namespace cyclemonoid {

// det(I - A), exact, fraction-free elimination.
BigInt det_I_minus_A(const MultiDigraph& g);

// det(I - zA) as an integer polynomial.
IntPolynomial det_I_minus_zA(const MultiDigraph& g);

// perm(I + A), exact, Ryser's formula. n <= 20.
BigInt perm_I_plus_A(const MultiDigraph& g);

// Sum over self-avoiding hikes of k^(number of cycles) = sum over
// independent sets S of H of k^|S|; coefficient m counts independent sets of
// size m. Evaluations: k = -1 gives det(I - A), k = +1 gives perm(I + A)
// for any G with phi(G) = H.
IntPolynomial sa_hike_polynomial(const SimpleGraph& h);

// Same polynomial computed from a cycle catalog: cycles sharing a vertex set
// form a clique, so independent sets pick at most one cycle per vertex set
// and the count telescopes through the N_W weights. Agrees with
// sa_hike_polynomial(phi_from_catalog(catalog).h) at any size.
IntPolynomial sa_hike_polynomial_from_catalog(const CycleCatalog& catalog);

// Ordinary generating function of hikes by cycle count: the inverse of the
// alternating independence polynomial (Cartier-Foata inversion), truncated
// at order D. The empty hike contributes 1 at z^0.
TruncatedSeries hike_gf_by_omega(const SimpleGraph& h, int order);

// Cartier-Foata normal form of a trace: nonempty layers, each an independent
// set of H, every letter of a layer dependent on (equal or adjacent to) some
// letter of the previous layer. Omega is the total letter count.
struct NormalFormTrace {
  std::vector<VertexSet> layers;
};
bool is_valid_normal_form(const SimpleGraph& h, const NormalFormTrace& t);

struct TraceBudgetExceeded : std::runtime_error {
  TraceBudgetExceeded() : std::runtime_error("trace enumeration budget exceeded") {}
};

// Independent oracle for the series above: enumerate normal forms outright
// and bucket them by Omega. The walk series keeps only traces with a unique
// maximal letter, detected by normalizing the reversed word and checking
// that its first layer is a singleton. Both count the empty trace at z^0.
TruncatedSeries count_traces_by_omega(const SimpleGraph& h, int order,
                                      std::int64_t budget = 10'000'000);
TruncatedSeries walk_gf_by_omega(const SimpleGraph& h, int order,
                                 std::int64_t budget = 10'000'000);

// Resolvent (I - zA)^{-1}_{ii} as an exact rational function plus its series
// to the given order; coefficient of z^l counts closed walks of length l
// rooted at i.
struct RationalSeries {
  IntPolynomial num, den;
  TruncatedSeries series;
};
RationalSeries walk_resolvent_gf(const MultiDigraph& g, int vertex, int order);

// Generating function of rooted walks i -> j by the number of loops erased
// under Lawler's procedure, brute-forced over walks of length <= max_len.
// Coefficient k is only complete when every walk with k erasures fits in
// max_len; length_complete_through reports the largest such k.
struct LoopErasedSeries {
  TruncatedSeries series;
  int max_len = 0;
  int length_complete_through = 0;
};
LoopErasedSeries loop_erased_omega_gf(const MultiDigraph& g, int from, int to, int max_len,
                                      int order, std::int64_t budget = 10'000'000);

}  // namespace cyclemonoid
