#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "dpsq/graph.hpp"

namespace dpsq {

// Stable vertex colors from iterated neighborhood refinement (start from
// degrees, refine until fixed point).  Two isomorphic graphs get identical
// sorted color multisets; used as a cheap pre-filter and to cut the
// isomorphism search.
std::vector<int> refinement_colors(const Graph& g);

// Invariant string that is equal for isomorphic graphs (n, m, degree sequence,
// sorted refinement color histogram).  Not a complete canonical form --
// candidates with equal keys still go through is_isomorphic.
std::string invariant_key(const Graph& g);

// Exhaustive isomorphism test (backtracking over color-compatible maps with
// adjacency consistency).  Graphs beyond max_n vertices raise budget_error.
bool is_isomorphic(const Graph& g, const Graph& h, int max_n = 12);

// Size of a maximum clique (branch and bound; fine for the small graphs here).
int max_clique(const Graph& g);

bool is_complete(const Graph& g);

} // namespace dpsq
