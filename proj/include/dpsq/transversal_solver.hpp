#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "dpsq/graph.hpp"

namespace dpsq {

// Low-level transversal search over partner tables, shared by the Cover
// front-end and the adversarial enumerators (which mutate tables in place
// between covers instead of rebuilding Cover objects).
//
// For edge e = (u, v) with u < v: to_hi[e][i] = the color of v matched with
// color i of u (or -1), to_lo[e][j] = the color of u matched with color j of
// v (or -1).
struct SolverTables {
    int n = 0;
    std::vector<int> list_size;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> to_hi, to_lo;
    // adjacency with edge ids: (neighbor, edge id) per vertex
    std::vector<std::vector<std::pair<int, int>>> inc;

    void init(int n_, const std::vector<int>& sizes, const std::vector<Edge>& es);
    void set_matching(int e, const std::vector<std::pair<int, int>>& pairs);
};

// nodes_used accumulates assignments tried; throws budget_error past max_nodes.
std::optional<std::vector<int>> solve_transversal(const SolverTables& t,
                                                  std::uint64_t max_nodes,
                                                  std::uint64_t* nodes_used = nullptr);

} // namespace dpsq
