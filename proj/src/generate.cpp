#include "dpsq/generate.hpp"

#include <algorithm>

#include "dpsq/errors.hpp"

namespace dpsq {

namespace {

void need_params(const std::vector<int>& p, size_t k, const std::string& name) {
    if (p.size() != k)
        throw input_error("generator '" + name + "' needs " + std::to_string(k) +
                          " parameter(s)");
}

Generated make_cycle(int n) {
    if (n < 3) throw input_error("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; i++) es.push_back({i, (i + 1) % n});
    return {build_graph(n, es), {}};
}

Generated make_path(int n) {
    if (n < 1) throw input_error("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
    return {build_graph(n, es), {}};
}

Generated make_complete(int n) {
    if (n < 1) throw input_error("complete needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) es.push_back({i, j});
    return {build_graph(n, es), {}};
}

Generated make_petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; i++) {
        es.push_back({i, (i + 1) % 5});         // outer cycle
        es.push_back({5 + i, 5 + (i + 2) % 5}); // inner pentagram
        es.push_back({i, 5 + i});               // spokes
    }
    return {build_graph(10, es), {}};
}

// two hubs joined by three threads of a,b,c internal 2-vertices
Generated make_theta(int a, int b, int c) {
    std::vector<int> len = {a, b, c};
    if (a < 0 || b < 0 || c < 0) throw input_error("theta needs lengths >= 0");
    if (std::count(len.begin(), len.end(), 0) > 1)
        throw input_error("theta: at most one zero-length thread (simple graph)");
    std::vector<Edge> es;
    int next = 2; // 0 and 1 are the hubs
    for (int l : len) {
        if (l == 0) {
            es.push_back({0, 1});
            continue;
        }
        int prev = 0;
        for (int i = 0; i < l; i++) {
            es.push_back({prev, next});
            prev = next++;
        }
        es.push_back({prev, 1});
    }
    return {build_graph(next, es), {}};
}

// 3-vertex 0 with three branches of a,b,c degree-2 vertices, each branch
// ending at a boundary vertex
Generated make_y(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw input_error("y needs lengths >= 0");
    std::vector<Edge> es;
    std::vector<int> boundary;
    int next = 1;
    for (int l : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < l; i++) {
            es.push_back({prev, next});
            prev = next++;
        }
        es.push_back({prev, next});
        boundary.push_back(next++);
    }
    return {build_graph(next, es), boundary};
}

// cycle 0..m-1 plus a boundary pendant at vertex 0 (the unique 3-vertex)
Generated make_face(int m) {
    if (m < 3) throw input_error("face needs m >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < m; i++) es.push_back({i, (i + 1) % m});
    es.push_back({0, m});
    return {build_graph(m + 1, es), {m}};
}

// path of l degree-2 vertices with a boundary vertex beyond each end
Generated make_thread(int l) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < l + 2; i++) es.push_back({i, i + 1});
    return {build_graph(l + 2, es), {0, l + 1}};
}

// triangle 0,1,2 where 0 and 1 each carry a pendant 2-vertex continuing to a
// boundary vertex (vertices: 3,4 pendants; 5,6 boundary)
Generated make_lemma5_2() {
    std::vector<Edge> es = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 5}, {1, 4}, {4, 6}};
    return {build_graph(7, es), {5, 6}};
}

// 4-cycle 0,1,2,3 where the adjacent 3-vertices 0 and 1 each carry a pendant
// 2-vertex continuing to a boundary vertex
Generated make_lemma5_3() {
    std::vector<Edge> es = {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                            {0, 4}, {4, 6}, {1, 5}, {5, 7}};
    return {build_graph(8, es), {6, 7}};
}

// 4-cycle 0,1,2,3 with nonadjacent 3-vertices 0 and 2, each carrying one
// boundary pendant
Generated make_lemma6_2() {
    std::vector<Edge> es = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 5}};
    return {build_graph(6, es), {4, 5}};
}

// degree-1 vertex attached to one boundary vertex
Generated make_mindeg() {
    return {build_graph(2, {{0, 1}}), {1}};
}

} // namespace

Generated generate(const std::string& name, const std::vector<int>& p) {
    if (name == "cycle") { need_params(p, 1, name); return make_cycle(p[0]); }
    if (name == "path") { need_params(p, 1, name); return make_path(p[0]); }
    if (name == "complete") { need_params(p, 1, name); return make_complete(p[0]); }
    if (name == "petersen") { need_params(p, 0, name); return make_petersen(); }
    if (name == "theta") { need_params(p, 3, name); return make_theta(p[0], p[1], p[2]); }
    if (name == "f23") { need_params(p, 0, name); return make_theta(1, 1, 1); }
    if (name == "y") { need_params(p, 3, name); return make_y(p[0], p[1], p[2]); }
    if (name == "face") { need_params(p, 1, name); return make_face(p[0]); }
    if (name == "mindeg") { need_params(p, 0, name); return make_mindeg(); }
    if (name == "lemma5") {
        need_params(p, 1, name);
        switch (p[0]) {
            case 1: return make_thread(3);
            case 2: return make_lemma5_2();
            case 3: return make_lemma5_3();
            case 4: return make_theta(0, 1, 1); // two 3-faces sharing an edge
            case 5: return make_theta(0, 2, 2); // two 4-faces sharing an edge
            case 6: return make_theta(0, 1, 2); // a 3-face and a 4-face sharing an edge
            default: throw input_error("lemma5 index must be 1..6");
        }
    }
    if (name == "lemma6") {
        need_params(p, 1, name);
        switch (p[0]) {
            case 1: return make_thread(2);
            case 2: return make_lemma6_2();
            case 3: return make_theta(1, 1, 1); // K_{2,3}
            default: throw input_error("lemma6 index must be 1..3");
        }
    }
    throw input_error("unknown generator '" + name + "'");
}

} // namespace dpsq
