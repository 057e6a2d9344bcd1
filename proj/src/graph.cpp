#include "dpsq/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dpsq/errors.hpp"

namespace dpsq {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& a : adj) total += (int)a.size();
    return total / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    for (int u = 0; u < n; u++)
        for (int v : adj[u])
            if (u < v) es.push_back({u, v});
    return es; // adjacency lists are sorted, so this is lexicographic already
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw input_error("negative vertex count");
    std::set<Edge> seen;
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(u + 1) +
                              " " + std::to_string(v + 1));
        if (u == v) throw input_error("loop at vertex " + std::to_string(u + 1));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue; // collapse duplicates
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats st;
    if (g.n == 0) { st.is_subcubic = true; return st; }
    st.min_degree = g.n;
    for (int v = 0; v < g.n; v++) {
        int d = g.degree(v);
        st.min_degree = std::min(st.min_degree, d);
        st.max_degree = std::max(st.max_degree, d);
    }
    st.histogram.assign(st.max_degree + 1, 0);
    for (int v = 0; v < g.n; v++) st.histogram[g.degree(v)]++;
    st.is_subcubic = st.max_degree <= 3;
    return st;
}

bool is_subcubic(const Graph& g) {
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) > 3) return false;
    return true;
}

void require_subcubic(const Graph& g, const std::string& where) {
    if (!is_subcubic(g)) throw input_error(where + ": graph is not subcubic");
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

Graph square(const Graph& g) {
    Graph h(g.n);
    for (int u = 0; u < g.n; u++) {
        std::set<int> nbrs(g.adj[u].begin(), g.adj[u].end());
        for (int w : g.adj[u])
            for (int x : g.adj[w])
                if (x != u) nbrs.insert(x);
        h.adj[u].assign(nbrs.begin(), nbrs.end());
    }
    return h;
}

std::optional<int> girth(const Graph& g) {
    // shortest cycle through each edge: drop the edge, measure dist(u,v)
    int best = -1;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(g.n, -1);
        std::deque<int> q;
        dist[u] = 0;
        q.push_back(u);
        while (!q.empty() && dist[v] < 0) {
            int x = q.front();
            q.pop_front();
            for (int w : g.adj[x]) {
                if ((x == u && w == v) || (x == v && w == u)) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    q.push_back(w);
                }
            }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; s++) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int w : g.adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> idx(g.n, -1);
    for (int i = 0; i < (int)keep.size(); i++) idx[keep[i]] = i;
    Graph h((int)keep.size());
    for (int i = 0; i < (int)keep.size(); i++)
        for (int w : g.adj[keep[i]])
            if (idx[w] >= 0) h.adj[i].push_back(idx[w]);
    for (auto& a : h.adj) std::sort(a.begin(), a.end());
    return h;
}

std::vector<Thread> find_threads(const Graph& g) {
    require_subcubic(g, "find_threads");
    std::vector<Thread> out;
    std::vector<char> used(g.n, 0);
    auto is2 = [&](int v) { return g.degree(v) == 2; };
    for (int s = 0; s < g.n; s++) {
        if (!is2(s) || used[s]) continue;
        // walk to one end of the path of 2-vertices through s (or detect a cycle)
        Thread t;
        int start = s;
        int prev = -1;
        bool cyclic = false;
        while (true) {
            int nxt = -1;
            for (int w : g.adj[start])
                if (w != prev && is2(w)) { nxt = w; break; }
            if (nxt < 0) break;
            if (nxt == s && prev != -1) { cyclic = true; break; } // walked full cycle
            prev = start;
            start = nxt;
            if (start == s) { cyclic = true; break; }
        }
        if (cyclic) {
            // collect the whole 2-regular cycle in order
            t.cyclic = true;
            int cur = s;
            prev = -1;
            do {
                t.vertices.push_back(cur);
                used[cur] = 1;
                int nxt = -1;
                for (int w : g.adj[cur])
                    if (w != prev) { nxt = w; break; }
                prev = cur;
                cur = nxt;
            } while (cur != s);
        } else {
            // start is an end of the path; walk across recording attachments
            int cur = start;
            prev = -1;
            for (int w : g.adj[cur])
                if (!is2(w)) t.attach_front = w;
            while (cur >= 0 && is2(cur)) {
                t.vertices.push_back(cur);
                used[cur] = 1;
                int nxt = -1;
                for (int w : g.adj[cur])
                    if (w != prev && is2(w)) { nxt = w; break; }
                prev = cur;
                cur = nxt;
            }
            int back = t.vertices.back();
            for (int w : g.adj[back])
                if (!is2(w) && (t.vertices.size() > 1 || w != t.attach_front))
                    t.attach_back = w;
            if (t.vertices.size() == 1 && g.degree(t.vertices[0]) == 2) {
                // single 2-vertex between two attachments: fix front/back split
                t.attach_front = g.adj[back][0];
                t.attach_back = g.adj[back][1];
            }
            t.longest = t.attach_front >= 0 && g.degree(t.attach_front) == 3 &&
                        t.attach_back >= 0 && g.degree(t.attach_back) == 3;
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<int> y_profile(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw input_error("y_profile: vertex out of range");
    if (g.degree(v) != 3) throw input_error("y_profile: vertex is not a 3-vertex");
    std::vector<int> prof;
    for (int first : g.adj[v]) {
        int len = 0;
        int prev = v, cur = first;
        while (g.degree(cur) == 2 && cur != v) {
            len++;
            int nxt = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        prof.push_back(len);
    }
    std::sort(prof.begin(), prof.end());
    return prof;
}

PeelResult peel_extendable(const Graph& g, const std::vector<int>& capacity) {
    PeelResult r;
    std::vector<int> deg(g.n);
    std::vector<char> alive(g.n, 1);
    for (int v = 0; v < g.n; v++) deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; v++) {
            if (alive[v] && capacity[v] > deg[v]) {
                alive[v] = 0;
                r.removed.push_back(v);
                for (int w : g.adj[v])
                    if (alive[w]) deg[w]--;
                changed = true;
            }
        }
    }
    for (int v = 0; v < g.n; v++)
        if (alive[v]) r.core.push_back(v);
    return r;
}

} // namespace dpsq
