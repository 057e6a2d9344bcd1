#include "dpsq/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "dpsq/errors.hpp"
#include "dpsq/iso.hpp"

namespace dpsq {

std::vector<Graph> enumerate_subcubic(int n, int max_n) {
    if (n < 1) throw input_error("enumerate_subcubic: n must be >= 1");
    if (n > max_n)
        throw budget_error("enumerate_subcubic: n beyond configured limit (" +
                           std::to_string(max_n) + ")");
    std::vector<Graph> level = {Graph(1)};
    for (int size = 2; size <= n; size++) {
        // bucket new candidates by invariant, keep one representative per class
        std::map<std::string, std::vector<Graph>> classes;
        for (const Graph& g : level) {
            std::vector<int> open; // vertices that can take one more edge
            for (int v = 0; v < g.n; v++)
                if (g.degree(v) <= 2) open.push_back(v);
            // all nonempty subsets of open vertices of size <= 3
            int k = (int)open.size();
            for (int mask = 1; mask < (1 << k); mask++) {
                if (__builtin_popcount(mask) > 3) continue;
                std::vector<Edge> es = g.edges();
                for (int i = 0; i < k; i++)
                    if (mask & (1 << i)) es.push_back({open[i], g.n});
                Graph cand = build_graph(g.n + 1, es);
                std::string key = invariant_key(cand);
                auto& bucket = classes[key];
                bool dup = false;
                for (const Graph& rep : bucket)
                    if (is_isomorphic(rep, cand, 16)) { dup = true; break; }
                if (!dup) bucket.push_back(std::move(cand));
            }
        }
        level.clear();
        for (auto& [key, bucket] : classes)
            for (Graph& g : bucket) level.push_back(std::move(g));
        // connectivity holds by construction (new vertex always attached)
    }
    if (n == 1) return level;
    return level;
}

Graph random_subcubic(int n, std::uint64_t seed, int min_degree) {
    if (n < 1) throw input_error("random_subcubic: n must be >= 1");
    if (min_degree == 2 && n < 3)
        throw input_error("random_subcubic: min degree 2 needs n >= 3");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; attempt++) {
        std::vector<Edge> es;
        std::vector<int> deg(n, 0);
        if (min_degree == 2) {
            // random cycle through all vertices, then sprinkle chords
            std::vector<int> order(n);
            for (int i = 0; i < n; i++) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            for (int i = 0; i < n; i++) {
                int u = order[i], v = order[(i + 1) % n];
                es.push_back({std::min(u, v), std::max(u, v)});
                deg[u]++; deg[v]++;
            }
        } else {
            // random spanning tree (random attachment), keeps it connected
            std::vector<int> order(n);
            for (int i = 0; i < n; i++) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            for (int i = 1; i < n; i++) {
                std::vector<int> choices;
                for (int j = 0; j < i; j++)
                    if (deg[order[j]] < 3) choices.push_back(order[j]);
                if (choices.empty()) { choices.push_back(order[i - 1]); }
                int p = choices[rng() % choices.size()];
                int u = order[i];
                es.push_back({std::min(u, p), std::max(u, p)});
                deg[u]++; deg[p]++;
            }
        }
        // extra edges between vertices that still have room
        int extra = (int)(rng() % (n / 2 + 1));
        for (int t = 0; t < extra * 4 && extra > 0; t++) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v || deg[u] >= 3 || deg[v] >= 3) continue;
            Edge e{std::min(u, v), std::max(u, v)};
            if (std::find(es.begin(), es.end(), e) != es.end()) continue;
            es.push_back(e);
            deg[u]++; deg[v]++;
            extra--;
        }
        bool ok = true;
        for (int v = 0; v < n; v++)
            if (deg[v] > 3 || deg[v] < min_degree) { ok = false; break; }
        if (!ok) continue;
        Graph g = build_graph(n, es);
        if (is_connected(g) && is_subcubic(g)) return g;
    }
    throw input_error("random_subcubic: generation failed");
}

} // namespace dpsq
