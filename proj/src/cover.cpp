#include "dpsq/cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dpsq/errors.hpp"
#include "dpsq/transversal_solver.hpp"

namespace dpsq {

namespace {

void validate_matching(const Edge& e, int su, int sv,
                       const std::vector<std::pair<int, int>>& pairs) {
    std::set<int> left, right;
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= su || j < 0 || j >= sv)
            throw invalid_cover_error("matching index out of range on edge " +
                                      std::to_string(e.first + 1) + "-" +
                                      std::to_string(e.second + 1));
        if (!left.insert(i).second || !right.insert(j).second)
            throw invalid_cover_error("pair set on edge " +
                                      std::to_string(e.first + 1) + "-" +
                                      std::to_string(e.second + 1) +
                                      " is not a matching");
    }
}

} // namespace

Cover build_cover(const Graph& base, const std::vector<int>& list_size,
                  const std::vector<std::pair<Edge, std::vector<std::pair<int, int>>>>& matchings) {
    if ((int)list_size.size() != base.n)
        throw invalid_cover_error("list_size count differs from vertex count");
    for (int s : list_size)
        if (s < 0) throw invalid_cover_error("negative list size");
    Cover c;
    c.base = base;
    c.list_size = list_size;
    std::vector<Edge> es = base.edges();
    std::map<Edge, int> eidx;
    for (int e = 0; e < (int)es.size(); e++) eidx[es[e]] = e;
    c.matching.assign(es.size(), {});
    for (const auto& [key, pairs] : matchings) {
        Edge e = key.first < key.second ? key : Edge{key.second, key.first};
        auto it = eidx.find(e);
        if (it == eidx.end())
            throw invalid_cover_error("matching listed for non-edge " +
                                      std::to_string(key.first + 1) + "-" +
                                      std::to_string(key.second + 1));
        std::vector<std::pair<int, int>> p = pairs;
        if (key.first > key.second)
            for (auto& pr : p) std::swap(pr.first, pr.second);
        validate_matching(e, list_size[e.first], list_size[e.second], p);
        c.matching[it->second] = std::move(p);
    }
    return c;
}

Cover identity_cover(const Graph& base, const std::vector<std::vector<int>>& lists) {
    if ((int)lists.size() != base.n)
        throw invalid_cover_error("one color list per vertex required");
    for (const auto& l : lists) {
        std::set<int> s(l.begin(), l.end());
        if (s.size() != l.size())
            throw invalid_cover_error("color list with repeated colors");
    }
    Cover c;
    c.base = base;
    c.list_size.resize(base.n);
    for (int v = 0; v < base.n; v++) c.list_size[v] = (int)lists[v].size();
    std::vector<Edge> es = base.edges();
    c.matching.assign(es.size(), {});
    for (int e = 0; e < (int)es.size(); e++) {
        auto [u, v] = es[e];
        for (int i = 0; i < (int)lists[u].size(); i++)
            for (int j = 0; j < (int)lists[v].size(); j++)
                if (lists[u][i] == lists[v][j]) c.matching[e].push_back({i, j});
    }
    return c;
}

bool is_valid_transversal(const Cover& c, const Transversal& t) {
    if ((int)t.size() != c.base.n) return false;
    for (int v = 0; v < c.base.n; v++)
        if (t[v] < 0 || t[v] >= c.list_size[v]) return false;
    std::vector<Edge> es = c.base.edges();
    for (int e = 0; e < (int)es.size(); e++) {
        auto [u, v] = es[e];
        for (auto [i, j] : c.matching[e])
            if (t[u] == i && t[v] == j) return false;
    }
    return true;
}

std::optional<Transversal> find_transversal(const Cover& c, std::uint64_t max_nodes) {
    SolverTables t;
    t.init(c.base.n, c.list_size, c.base.edges());
    for (int e = 0; e < (int)c.matching.size(); e++) t.set_matching(e, c.matching[e]);
    return solve_transversal(t, max_nodes);
}

} // namespace dpsq
