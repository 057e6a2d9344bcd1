#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "dpsq/budget.hpp"
#include "dpsq/cover.hpp"
#include "dpsq/graph.hpp"

namespace dpsq {

// Options for the adversarial check.  peeling strips vertices that are always
// greedily extendable (capacity k exceeds remaining degree); removing them
// changes neither verdict (a bad cover of the stripped graph lifts by empty
// matchings, and any cover of the full graph restricts + extends greedily),
// but it collapses the enumeration space.  normalized fixes identity
// matchings on a spanning tree of the surviving core (every cover is
// fiber-relabel-equivalent to one of that form); raw mode enumerates all
// edges and exists as the test oracle for exactly that reduction.
struct DpOptions {
    Budget budget{};
    bool peel = true;
    bool normalized = true;
};

struct DpResult {
    bool colorable = false;
    std::optional<Cover> witness;      // transversal-free cover when !colorable
    std::uint64_t covers_checked = 0;
    double space_estimate = 0;         // total covers the enumeration would visit
    int core_size = 0;                 // vertices surviving the peel
};

// Decides "every cover with all fibers of size k admits a transversal".
// Enumeration: full matchings (permutations) on every surviving edge, tree
// edges pinned to the identity, lexicographic order, early abort on the first
// bad cover.  Throws budget_error when the space exceeds the budget.
DpResult is_dp_k_colorable(const Graph& g, int k, const DpOptions& opts = {});

// Least k for which is_dp_k_colorable holds; starts at the clique number.
int dp_chromatic(const Graph& g, const DpOptions& opts = {});

// Plain list coloring: is there a proper coloring with colors drawn from the
// given lists?  Independent brute force, no cover machinery.
bool list_coloring_oracle(const Graph& g, const std::vector<std::vector<int>>& lists);

// Can g be properly colored with k colors?
bool k_colorable(const Graph& g, int k);

// Exact chromatic number (branch and bound from the clique number).
int chromatic_number(const Graph& g);

} // namespace dpsq
