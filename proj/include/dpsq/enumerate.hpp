#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "dpsq/graph.hpp"

namespace dpsq {

// All connected subcubic graphs on exactly n vertices, one per isomorphism
// class, in a deterministic order.  Levels are built by attaching a new vertex
// to 1..3 vertices of degree <= 2 of every (n-1)-vertex class; duplicates are
// filtered by invariant bucketing plus explicit isomorphism tests.  Every
// connected subcubic graph has a non-cut vertex, so the augmentation is
// complete.  n beyond max_n raises budget_error.
std::vector<Graph> enumerate_subcubic(int n, int max_n = 10);

// Seeded random connected subcubic graph on n vertices (deterministic for a
// fixed seed).  min_degree may be 1 or 2; 2 requires n >= 3.
Graph random_subcubic(int n, std::uint64_t seed, int min_degree = 1);

} // namespace dpsq
