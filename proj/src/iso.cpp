#include "dpsq/iso.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dpsq/errors.hpp"

namespace dpsq {

std::vector<int> refinement_colors(const Graph& g) {
    std::vector<int> color(g.n);
    for (int v = 0; v < g.n; v++) color[v] = g.degree(v);
    for (int round = 0; round < g.n; round++) {
        // signature = (own color, sorted neighbor colors)
        std::map<std::pair<int, std::vector<int>>, int> remap;
        std::vector<std::pair<int, std::vector<int>>> sig(g.n);
        for (int v = 0; v < g.n; v++) {
            std::vector<int> nb;
            for (int w : g.adj[v]) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        for (int v = 0; v < g.n; v++) remap.emplace(sig[v], 0);
        // number color classes by signature order so ids are label-independent
        int next_id = 0;
        for (auto& kv : remap) kv.second = next_id++;
        std::vector<int> next(g.n);
        for (int v = 0; v < g.n; v++) next[v] = remap[sig[v]];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::string invariant_key(const Graph& g) {
    std::vector<int> colors = refinement_colors(g);
    std::sort(colors.begin(), colors.end());
    std::vector<int> degs(g.n);
    for (int v = 0; v < g.n; v++) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    std::ostringstream os;
    os << g.n << ":" << g.edge_count() << ":" << connected_components(g).size()
       << ":";
    for (int d : degs) os << d;
    os << ":";
    for (int c : colors) os << c << ",";
    return os.str();
}

namespace {

bool extend_map(const Graph& g, const Graph& h, const std::vector<int>& cg,
                const std::vector<int>& ch, std::vector<int>& map_gh,
                std::vector<char>& used_h, int v) {
    if (v == g.n) return true;
    for (int w = 0; w < h.n; w++) {
        if (used_h[w] || ch[w] != cg[v]) continue;
        bool ok = true;
        for (int u : g.adj[v]) {
            if (map_gh[u] >= 0 && !h.has_edge(map_gh[u], w)) { ok = false; break; }
        }
        if (ok) {
            // also reject mapped non-neighbors of v that are neighbors of w
            for (int x : h.adj[w]) {
                // find preimage of x among mapped vertices
                for (int u = 0; u < v; u++)
                    if (map_gh[u] == x && !g.has_edge(u, v)) { ok = false; break; }
                if (!ok) break;
            }
        }
        if (!ok) continue;
        map_gh[v] = w;
        used_h[w] = 1;
        if (extend_map(g, h, cg, ch, map_gh, used_h, v + 1)) return true;
        map_gh[v] = -1;
        used_h[w] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Graph& g, const Graph& h, int max_n) {
    if (g.n > max_n || h.n > max_n)
        throw budget_error("is_isomorphic: graph larger than configured limit (" +
                           std::to_string(max_n) + " vertices)");
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    std::vector<int> cg = refinement_colors(g), ch = refinement_colors(h);
    {
        std::vector<int> a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::vector<int> map_gh(g.n, -1);
    std::vector<char> used_h(h.n, 0);
    return extend_map(g, h, cg, ch, map_gh, used_h, 0);
}

namespace {

void clique_search(const Graph& g, std::vector<int>& cur, std::vector<int>& cand,
                   int& best) {
    if ((int)cur.size() + (int)cand.size() <= best) return;
    if (cand.empty()) {
        best = std::max(best, (int)cur.size());
        return;
    }
    while (!cand.empty()) {
        if ((int)cur.size() + (int)cand.size() <= best) return;
        int v = cand.back();
        cand.pop_back();
        std::vector<int> next;
        for (int w : cand)
            if (g.has_edge(v, w)) next.push_back(w);
        cur.push_back(v);
        clique_search(g, cur, next, best);
        cur.pop_back();
    }
}

} // namespace

int max_clique(const Graph& g) {
    if (g.n == 0) return 0;
    std::vector<int> cur, cand(g.n);
    for (int v = 0; v < g.n; v++) cand[v] = v;
    int best = 1;
    clique_search(g, cur, cand, best);
    return best;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.n * (g.n - 1) / 2;
}

} // namespace dpsq
