#include "dpsq/detect.hpp"

#include <algorithm>

#include "dpsq/errors.hpp"

namespace dpsq {

namespace {

bool adjacent(const Graph& g, int u, int v) {
    return std::binary_search(g.adj[u].begin(), g.adj[u].end(), v);
}

int deg(const Graph& g, int v) { return (int)g.adj[v].size(); }

// the neighbor of a 2-vertex other than `from`
int other(const Graph& g, int v, int from) {
    return g.adj[v][0] == from ? g.adj[v][1] : g.adj[v][0];
}

// third neighbor of a 3-vertex, excluding two known ones
int third(const Graph& g, int v, int a, int b) {
    for (int w : g.adj[v])
        if (w != a && w != b) return w;
    return -1;
}

void detect_common(const Graph& g, std::vector<Occurrence>& out) {
    for (int v = 0; v < g.n; v++) {
        if (deg(g, v) == 0) out.push_back({"0-vertex", {v}});
        if (deg(g, v) == 1) out.push_back({"1-vertex", {v}});
    }
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 3) continue;
        bool two_regular = true;
        for (int v : comp)
            if (deg(g, v) != 2) two_regular = false;
        if (two_regular) out.push_back({"cycle-component", comp});
    }
}

void detect_threads(const Graph& g, int k, std::vector<Occurrence>& out) {
    int need = k == 5 ? 3 : 2;
    for (const Thread& t : find_threads(g)) {
        if (t.cyclic) continue; // cycle-component
        if (t.attach_front >= 0 && t.attach_front == t.attach_back) {
            std::vector<int> verts = t.vertices;
            verts.insert(verts.begin(), t.attach_front);
            out.push_back({"face", verts});
        }
        if ((int)t.vertices.size() >= need) {
            std::vector<int> verts(t.vertices.begin(), t.vertices.begin() + need);
            out.push_back({k == 5 ? "3-thread" : "2-thread", verts});
        }
    }
}

void detect5(const Graph& g, std::vector<Occurrence>& out) {
    // triangle with a pendant 2-vertex on each of its two 3-vertices
    for (int v1 = 0; v1 < g.n; v1++)
        for (int v2 = v1 + 1; v2 < g.n; v2++) {
            if (!adjacent(g, v1, v2) || deg(g, v1) != 3 || deg(g, v2) != 3) continue;
            for (int v3 : g.adj[v1]) {
                if (v3 == v2 || !adjacent(g, v2, v3) || deg(g, v3) != 2) continue;
                int p1 = third(g, v1, v2, v3), p2 = third(g, v2, v1, v3);
                if (deg(g, p1) != 2 || deg(g, p2) != 2 || p1 == p2) continue;
                int q1 = other(g, p1, v1), q2 = other(g, p2, v2);
                if (q1 == v2 || q1 == v3 || q1 == p2) continue;
                if (q2 == v1 || q2 == v3 || q2 == p1) continue;
                out.push_back({"3-face-pendants", {v1, v2, v3, p1, p2}});
            }
        }

    // 4-cycle v1-v2-v3-v4 whose adjacent 3-vertices v1, v2 carry pendant
    // 2-vertices; v3, v4 are 2-vertices
    for (int v1 = 0; v1 < g.n; v1++)
        for (int v2 : g.adj[v1]) {
            if (v1 >= v2 || deg(g, v1) != 3 || deg(g, v2) != 3) continue;
            for (int v4 : g.adj[v1]) {
                if (v4 == v2 || deg(g, v4) != 2) continue;
                for (int v3 : g.adj[v2]) {
                    if (v3 == v1 || v3 == v4 || deg(g, v3) != 2) continue;
                    if (!adjacent(g, v3, v4)) continue;
                    if (adjacent(g, v1, v3) || adjacent(g, v2, v4)) continue;
                    int p1 = third(g, v1, v2, v4), p2 = third(g, v2, v1, v3);
                    if (deg(g, p1) != 2 || deg(g, p2) != 2 || p1 == p2) continue;
                    if (p1 == v3 || p2 == v4) continue;
                    int q1 = other(g, p1, v1), q2 = other(g, p2, v2);
                    if (q1 == v2 || q1 == v3 || q1 == v4 || q1 == p2) continue;
                    if (q2 == v1 || q2 == v3 || q2 == v4 || q2 == p1) continue;
                    out.push_back({"4-face-pendants", {v1, v2, v3, v4, p1, p2}});
                }
            }
        }

    for (int u = 0; u < g.n; u++)
        for (int v : g.adj[u]) {
            if (u >= v || deg(g, u) != 3 || deg(g, v) != 3) continue;
            std::vector<int> common;
            for (int w : g.adj[u])
                if (w != v && adjacent(g, v, w)) common.push_back(w);

            // two triangles sharing edge uv
            if (common.size() == 2 && deg(g, common[0]) == 2 && deg(g, common[1]) == 2)
                out.push_back({"double-3-face", {u, v, common[0], common[1]}});

            // triangle plus 4-cycle sharing edge uv
            if (common.size() == 1 && deg(g, common[0]) == 2) {
                int w = common[0];
                int a = third(g, u, v, w);
                if (deg(g, a) == 2) {
                    int b = other(g, a, u);
                    if (b != v && b != w && deg(g, b) == 2 && other(g, b, a) == v)
                        out.push_back({"3-4-face", {u, v, w, a, b}});
                }
            }

            // two 4-cycles sharing edge uv
            if (common.empty()) {
                int a1 = -1, b1 = -1;
                for (int w : g.adj[u])
                    if (w != v) (a1 < 0 ? a1 : b1) = w;
                if (deg(g, a1) != 2 || deg(g, b1) != 2) continue;
                int a2 = other(g, a1, u), b2 = other(g, b1, u);
                if (a2 == v || b2 == v || a2 == b1 || b2 == a1 || a2 == b2) continue;
                if (deg(g, a2) != 2 || deg(g, b2) != 2) continue;
                if (other(g, a2, a1) == v && other(g, b2, b1) == v)
                    out.push_back({"double-4-face", {u, v, a1, a2, b1, b2}});
            }
        }
}

void detect6(const Graph& g, std::vector<Occurrence>& out) {
    // 4-cycle whose only 3-vertices are the two opposite ones
    for (int x = 0; x < g.n; x++) {
        if (deg(g, x) != 2) continue;
        for (int y = x + 1; y < g.n; y++) {
            if (deg(g, y) != 2 || g.adj[x] != g.adj[y]) continue;
            int a = g.adj[x][0], b = g.adj[x][1];
            if (deg(g, a) == 3 && deg(g, b) == 3 && !adjacent(g, a, b))
                out.push_back({"4-face-nonadjacent", {a, x, b, y}});
        }
    }

    // K_{2,3}: two nonadjacent 3-vertices with three common 2-neighbors
    for (int u = 0; u < g.n; u++) {
        if (deg(g, u) != 3) continue;
        for (int v = u + 1; v < g.n; v++) {
            if (deg(g, v) != 3 || adjacent(g, u, v) || g.adj[u] != g.adj[v]) continue;
            bool all2 = true;
            for (int w : g.adj[u])
                if (deg(g, w) != 2) all2 = false;
            if (all2)
                out.push_back({"f23", {u, v, g.adj[u][0], g.adj[u][1], g.adj[u][2]}});
        }
    }
}

} // namespace

std::vector<Occurrence> detect_reducible(const Graph& g, int k) {
    if (k != 5 && k != 6) throw input_error("detect_reducible: k must be 5 or 6");
    require_subcubic(g, "detect_reducible");
    std::vector<Occurrence> out;
    detect_common(g, out);
    detect_threads(g, k, out);
    if (k == 5)
        detect5(g, out);
    else
        detect6(g, out);
    return out;
}

StructureAudit audit_minimal_structure(const Graph& g, int k) {
    StructureAudit audit;
    audit.blocking = detect_reducible(g, k);
    audit.applicable = audit.blocking.empty();
    if (!audit.applicable) {
        audit.passed = true; // nothing to assert
        return audit;
    }
    for (int v = 0; v < g.n; v++) {
        if (deg(g, v) != 3) continue;
        std::vector<int> p = y_profile(g, v);
        bool ok;
        if (k == 5) {
            ok = p[2] <= 2;
            bool has3nbr = false;
            for (int u : g.adj[v])
                if (deg(g, u) == 3) has3nbr = true;
            if (has3nbr) ok = ok && p[0] == 0;
        } else {
            ok = (p[0] == 1 && p[1] == 1 && p[2] == 1) || (p[0] == 0 && p[2] <= 1);
        }
        if (!ok) audit.violations.push_back({v, p});
    }
    audit.passed = audit.violations.empty();
    return audit;
}

} // namespace dpsq
