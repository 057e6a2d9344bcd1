#include "dpsq/mad.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>

#include "dpsq/errors.hpp"

namespace dpsq {

Rational mad_bruteforce(const Graph& g, int max_n) {
    if (g.n > max_n || g.n > 25)
        throw budget_error("mad_bruteforce: graph larger than configured limit");
    if (g.n == 0) return Rational(0);
    std::vector<std::uint32_t> nbr(g.n, 0);
    for (int v = 0; v < g.n; v++)
        for (int w : g.adj[v]) nbr[v] |= 1u << w;
    Rational best(0);
    for (std::uint32_t mask = 1; mask < (1u << g.n); mask++) {
        int verts = __builtin_popcount(mask);
        int dsum = 0;
        std::uint32_t m = mask;
        while (m) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            dsum += __builtin_popcount(nbr[v] & mask);
        }
        Rational dens(dsum, verts); // dsum = 2*edges inside
        if (best < dens) best = dens;
    }
    return best;
}

namespace {

// Dinic max flow on a small integer-capacity network.
struct Flow {
    struct Arc { int to; std::int64_t cap; int rev; };
    std::vector<std::vector<Arc>> a;
    std::vector<int> lvl, it;
    explicit Flow(int n) : a(n), lvl(n), it(n) {}
    void add(int u, int v, std::int64_t c) {
        a[u].push_back({v, c, (int)a[v].size()});
        a[v].push_back({u, 0, (int)a[u].size() - 1});
    }
    bool bfs(int s, int t) {
        std::fill(lvl.begin(), lvl.end(), -1);
        std::queue<int> q;
        lvl[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto& e : a[u])
                if (e.cap > 0 && lvl[e.to] < 0) {
                    lvl[e.to] = lvl[u] + 1;
                    q.push(e.to);
                }
        }
        return lvl[t] >= 0;
    }
    std::int64_t dfs(int u, int t, std::int64_t f) {
        if (u == t) return f;
        for (int& i = it[u]; i < (int)a[u].size(); i++) {
            auto& e = a[u][i];
            if (e.cap > 0 && lvl[e.to] == lvl[u] + 1) {
                std::int64_t d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    a[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }
    std::int64_t max_flow(int s, int t) {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (std::int64_t d = dfs(s, t, INT64_MAX)) total += d;
        }
        return total;
    }
};

// Is there a nonempty S with |E(S)|/|S| strictly greater than p/q?
// Equivalently max over S of (q*e(S) - p*|S|) >= 1, read off a min cut of the
// standard density network (source -> edge nodes cap q, edge -> endpoints
// cap inf, vertex -> sink cap p).
bool density_exceeds(const Graph& g, const std::vector<Edge>& es,
                     std::int64_t p, std::int64_t q) {
    int m = (int)es.size();
    int S = m + g.n, T = m + g.n + 1;
    Flow f(m + g.n + 2);
    const std::int64_t INF = (std::int64_t)1 << 60;
    for (int i = 0; i < m; i++) {
        f.add(S, i, q);
        f.add(i, m + es[i].first, INF);
        f.add(i, m + es[i].second, INF);
    }
    for (int v = 0; v < g.n; v++) f.add(m + v, T, p);
    std::int64_t cut = f.max_flow(S, T);
    return cut <= q * (std::int64_t)m - 1;
}

} // namespace

Rational mad_exact(const Graph& g) {
    if (g.n == 0) return Rational(0);
    std::vector<Edge> es = g.edges();
    int m = (int)es.size();
    if (m == 0) return Rational(0);
    // candidate densities: every achievable |E(S)|/|S|
    std::set<Rational> cands;
    for (int v = 1; v <= g.n; v++)
        for (int e = 0; e <= m; e++) cands.insert(Rational(e, v));
    std::vector<Rational> c(cands.begin(), cands.end());
    // find the smallest candidate c such that no subgraph is strictly denser
    size_t lo = 0, hi = c.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (density_exceeds(g, es, c[mid].num, c[mid].den))
            lo = mid + 1;
        else
            hi = mid;
    }
    return Rational(2) * c[lo];
}

Rational girth_mad_bound(int g) {
    if (g <= 2) throw input_error("girth_mad_bound needs girth >= 3");
    return Rational(2 * g, g - 2);
}

} // namespace dpsq
