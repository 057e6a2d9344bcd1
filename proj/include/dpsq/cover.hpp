#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dpsq/budget.hpp"
#include "dpsq/graph.hpp"

namespace dpsq {

// A cover of a base graph: one fiber of list_size[v] colors per vertex
// (colors are 0-based indices local to the vertex) and, per base edge, a
// partial matching between the two fibers.  matching[e] holds pairs (i, j):
// color i of the lower endpoint conflicts with color j of the upper endpoint
// of edges()[e].  A transversal picks one color per vertex avoiding every
// matched pair.
struct Cover {
    Graph base;
    std::vector<int> list_size;
    std::vector<std::vector<std::pair<int, int>>> matching; // indexed like base.edges()
};

// Validates sizes and matchings (indices in range, no repeated left or right
// index within an edge).  `matchings` entries are keyed by (u, v) with u < v;
// a key that is not a base edge raises invalid_cover_error.  Edges without a
// listed matching get the empty matching.
Cover build_cover(const Graph& base, const std::vector<int>& list_size,
                  const std::vector<std::pair<Edge, std::vector<std::pair<int, int>>>>& matchings);

// Cover induced by explicit color lists: fiber i of v is lists[v][i], and two
// fiber colors are matched iff they name the same global color.  Transversals
// of this cover are exactly proper list colorings.
Cover identity_cover(const Graph& base, const std::vector<std::vector<int>>& lists);

// One color index per vertex, or nullopt.
using Transversal = std::vector<int>;

bool is_valid_transversal(const Cover& c, const Transversal& t);

// Complete backtracking search: most-constrained vertex first, colors in
// ascending order, with a greedy fast path (when every undecided vertex has
// more remaining colors than undecided neighbors, any greedy completion
// works).  Deterministic.  Throws budget_error after max_nodes assignments.
std::optional<Transversal> find_transversal(const Cover& c,
                                            std::uint64_t max_nodes = Budget{}.max_nodes);

} // namespace dpsq
