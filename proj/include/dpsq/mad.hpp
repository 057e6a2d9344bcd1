#pragma once
#include "dpsq/graph.hpp"
#include "dpsq/rational.hpp"

namespace dpsq {

// Maximum average degree: max over nonempty subgraphs H of 2|E(H)|/|V(H)|.
// Only induced subgraphs matter (dropping edges never raises the ratio).
// Empty graph and single vertices give 0/1.

// Direct scan over all vertex subsets; n beyond max_n raises budget_error.
Rational mad_bruteforce(const Graph& g, int max_n = 20);

// Exact flow-based computation: binary search over the candidate densities
// e/v (integers e <= m, v <= n) with a max-flow feasibility test per probe;
// all arithmetic is integral.  Works for any graph size.
Rational mad_exact(const Graph& g);

// The folklore planar bound: a planar graph with girth >= g has
// mad < 2g/(g-2).  Returns the rational value 2g/(g-2); g <= 2 raises
// input_error.  Strictly decreasing in g, approaching 2.
Rational girth_mad_bound(int g);

} // namespace dpsq
