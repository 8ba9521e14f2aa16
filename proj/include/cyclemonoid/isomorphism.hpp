#pragma once

#include <string>

#include "cyclemonoid/graph.hpp"

namespace cyclemonoid {

// Exact isomorphism test by permutation backtracking with vertex-invariant
// pruning (degree, sorted neighbor-degree multisets). Intended for small
// graphs; raise max_n deliberately when a larger instance is known to be
// cheap (e.g. complete graphs from phi fixtures).
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, int max_n = 12);

// Canonical key: the graph6 encoding of the lexicographically smallest
// adjacency bit string over all vertex relabelings (branch and bound).
// Equal strings iff isomorphic. Pure function of the graph.
std::string canonical_form(const SimpleGraph& h, int max_n = 12);

}  // namespace cyclemonoid
