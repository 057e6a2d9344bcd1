#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpsq {

using Edge = std::pair<int, int>; // always stored with first < second

// Simple undirected graph, adjacency lists kept sorted.  Vertices are
// 0-based ints; file formats are 1-based and the io layer translates.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    int degree(int v) const { return (int)adj[v].size(); }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    std::vector<Edge> edges() const; // sorted lexicographically
};

// Builds a graph from an edge list.  Duplicate edges are collapsed.
// Loops or out-of-range endpoints raise input_error.
Graph build_graph(int n, const std::vector<Edge>& edges);

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> histogram; // histogram[d] = number of vertices of degree d
    bool is_subcubic = false;   // max_degree <= 3
};
DegreeStats degree_stats(const Graph& g);

bool is_subcubic(const Graph& g);
void require_subcubic(const Graph& g, const std::string& where);

// BFS distances from src; unreachable = -1.
std::vector<int> bfs_distances(const Graph& g, int src);

// The square: same vertices, edge iff distance 1 or 2 in g.
Graph square(const Graph& g);

// Length of a shortest cycle; nullopt when acyclic.
std::optional<int> girth(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Induced subgraph on `keep` (order preserved); vertex i of the result is
// keep[i] in g.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// A thread is an induced path of degree-2 vertices.  find_threads reports the
// maximal ones: every 2-vertex lies in exactly one reported thread.  The
// components of the graph induced by 2-vertices are paths or full cycles;
// cycles are reported with cyclic=true and no endpoints.
struct Thread {
    std::vector<int> vertices;   // in path order (or cycle order)
    bool cyclic = false;
    // attachment vertices beyond each end of a path thread (degree != 2);
    // -1 when the end of the path dangles on a degree-1/0 vertex with no
    // attachment (cannot happen for 2-vertices, kept for safety)
    int attach_front = -1;
    int attach_back = -1;
    bool longest = false;        // both attachments are 3-vertices
};
std::vector<Thread> find_threads(const Graph& g); // input_error if not subcubic

// Branch profile of a 3-vertex: for each incident edge, the number of
// consecutive degree-2 vertices walked before reaching a vertex of degree != 2
// (or walking back around a cycle to v itself).  Sorted ascending.
// input_error unless deg(v) == 3.
std::vector<int> y_profile(const Graph& g, int v);

// Iteratively removes vertices whose "capacity" exceeds their current degree
// (capacity k means the vertex can always be colored last among its
// neighbors).  Returns the surviving vertex set (sorted) and the removal
// order.  Used both as a fast DP-colorability certificate and to shrink
// exhaustive searches.
struct PeelResult {
    std::vector<int> core;     // survivors, sorted
    std::vector<int> removed;  // removal order (greedy extension runs in reverse)
};
PeelResult peel_extendable(const Graph& g, const std::vector<int>& capacity);

} // namespace dpsq
