#include "dpsq/dp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dpsq/errors.hpp"
#include "dpsq/iso.hpp"
#include "dpsq/transversal_solver.hpp"

namespace dpsq {

namespace {

double factorial_d(int k) {
    double f = 1;
    for (int i = 2; i <= k; i++) f *= i;
    return f;
}

// deterministic spanning forest (BFS from the lowest vertex of each component)
std::vector<char> spanning_forest_mark(const Graph& g) {
    std::vector<Edge> es = g.edges();
    std::vector<char> tree(es.size(), 0);
    std::vector<int> parent_edge(g.n, -1);
    std::vector<char> seen(g.n, 0);
    // edge lookup
    auto edge_id = [&](int u, int v) {
        Edge e{std::min(u, v), std::max(u, v)};
        return (int)(std::lower_bound(es.begin(), es.end(), e) - es.begin());
    };
    for (int s = 0; s < g.n; s++) {
        if (seen[s]) continue;
        std::vector<int> q{s};
        seen[s] = 1;
        for (size_t head = 0; head < q.size(); head++) {
            int u = q[head];
            for (int w : g.adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    tree[edge_id(u, w)] = 1;
                    q.push_back(w);
                }
        }
    }
    return tree;
}

// Lifts a bad cover found on the core back to a cover of the full graph:
// size-k fibers everywhere, the core matchings where they exist, empty
// matchings elsewhere.  A transversal of the lift would restrict to a
// transversal of the core cover, so the lift is transversal-free too.
Cover lift_witness(const Graph& g, int k, const std::vector<int>& core,
                   const SolverTables& tables) {
    Cover c;
    c.base = g;
    c.list_size.assign(g.n, k);
    std::vector<Edge> es = g.edges();
    c.matching.assign(es.size(), {});
    for (int e = 0; e < (int)tables.edges.size(); e++) {
        auto [cu, cv] = tables.edges[e];
        Edge ge{std::min(core[cu], core[cv]), std::max(core[cu], core[cv])};
        int gid = (int)(std::lower_bound(es.begin(), es.end(), ge) - es.begin());
        for (int i = 0; i < k; i++)
            if (tables.to_hi[e][i] >= 0)
                c.matching[gid].push_back({i, tables.to_hi[e][i]});
        if (core[cu] > core[cv])
            for (auto& pr : c.matching[gid]) std::swap(pr.first, pr.second);
    }
    return c;
}

} // namespace

DpResult is_dp_k_colorable(const Graph& g, int k, const DpOptions& opts) {
    if (k < 0) throw input_error("is_dp_k_colorable: negative k");
    DpResult res;
    if (g.n == 0) {
        res.colorable = true;
        return res;
    }
    if (k == 0) {
        // a size-0 cover exists and has no transversal
        res.colorable = false;
        res.witness = build_cover(g, std::vector<int>(g.n, 0), {});
        res.space_estimate = 1;
        return res;
    }

    std::vector<int> core(g.n);
    std::iota(core.begin(), core.end(), 0);
    if (opts.peel) {
        PeelResult pr = peel_extendable(g, std::vector<int>(g.n, k));
        core = pr.core;
    }
    res.core_size = (int)core.size();
    if (core.empty()) {
        res.colorable = true;
        res.space_estimate = 0;
        return res;
    }

    Graph h = induced_subgraph(g, core);
    std::vector<Edge> es = h.edges();
    std::vector<char> tree = opts.normalized ? spanning_forest_mark(h)
                                             : std::vector<char>(es.size(), 0);
    std::vector<int> free_edges; // edges whose permutation is enumerated
    for (int e = 0; e < (int)es.size(); e++)
        if (!tree[e]) free_edges.push_back(e);

    res.space_estimate = std::pow(factorial_d(k), (double)free_edges.size());

    SolverTables tables;
    tables.init(h.n, std::vector<int>(h.n, k), es);
    std::vector<std::pair<int, int>> ident;
    for (int i = 0; i < k; i++) ident.push_back({i, i});
    for (int e = 0; e < (int)es.size(); e++) tables.set_matching(e, ident);

    // odometer of lexicographic permutations on the free edges
    std::vector<std::vector<int>> perm(free_edges.size());
    for (auto& p : perm) {
        p.resize(k);
        std::iota(p.begin(), p.end(), 0);
    }
    auto apply = [&](int slot) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; i++) pairs.push_back({i, perm[slot][i]});
        tables.set_matching(free_edges[slot], pairs);
    };

    while (true) {
        if (res.covers_checked >= opts.budget.max_covers)
            throw budget_error("is_dp_k_colorable: cover budget exceeded",
                               res.covers_checked, res.space_estimate);
        std::optional<std::vector<int>> t =
            solve_transversal(tables, opts.budget.max_nodes);
        res.covers_checked++;
        if (!t) {
            res.colorable = false;
            res.witness = lift_witness(g, k, core, tables);
            return res;
        }
        // advance the odometer (next_permutation with carry)
        int slot = (int)free_edges.size() - 1;
        while (slot >= 0) {
            if (std::next_permutation(perm[slot].begin(), perm[slot].end())) {
                apply(slot);
                break;
            }
            apply(slot); // wrapped back to identity
            slot--;
        }
        if (slot < 0) break; // full space exhausted
    }
    res.colorable = true;
    return res;
}

int dp_chromatic(const Graph& g, const DpOptions& opts) {
    if (g.n == 0) return 0;
    int k = std::max(1, max_clique(g));
    while (true) {
        try {
            if (is_dp_k_colorable(g, k, opts).colorable) return k;
        } catch (const budget_error& e) {
            throw budget_error("dp_chromatic: undecided at k=" + std::to_string(k) +
                                   " (value lies in [" + std::to_string(k) + ", " +
                                   std::to_string(g.n) + "])",
                               e.covers_checked, e.space_estimate);
        }
        k++;
    }
}

namespace {

bool color_rec(const Graph& g, const std::vector<std::vector<int>>& lists,
               std::vector<int>& chosen, int v) {
    if (v == g.n) return true;
    for (int c : lists[v]) {
        bool ok = true;
        for (int w : g.adj[v])
            if (w < v && chosen[w] == c) { ok = false; break; }
        if (!ok) continue;
        chosen[v] = c;
        if (color_rec(g, lists, chosen, v + 1)) return true;
    }
    chosen[v] = INT32_MIN;
    return false;
}

} // namespace

bool list_coloring_oracle(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if ((int)lists.size() != g.n)
        throw input_error("list_coloring_oracle: one list per vertex required");
    std::vector<int> chosen(g.n, INT32_MIN);
    return color_rec(g, lists, chosen, 0);
}

bool k_colorable(const Graph& g, int k) {
    if (k < 0) throw input_error("k_colorable: negative k");
    std::vector<int> palette(k);
    std::iota(palette.begin(), palette.end(), 0);
    return list_coloring_oracle(g, std::vector<std::vector<int>>(g.n, palette));
}

int chromatic_number(const Graph& g) {
    if (g.n == 0) return 0;
    for (int k = std::max(1, max_clique(g));; k++)
        if (k_colorable(g, k)) return k;
}

} // namespace dpsq
