#include "dpsq/transversal_solver.hpp"

#include <algorithm>
#include <bit>

#include "dpsq/errors.hpp"

namespace dpsq {

void SolverTables::init(int n_, const std::vector<int>& sizes,
                        const std::vector<Edge>& es) {
    n = n_;
    list_size = sizes;
    edges = es;
    to_hi.assign(es.size(), {});
    to_lo.assign(es.size(), {});
    inc.assign(n, {});
    for (int e = 0; e < (int)es.size(); e++) {
        auto [u, v] = es[e];
        to_hi[e].assign(list_size[u], -1);
        to_lo[e].assign(list_size[v], -1);
        inc[u].push_back({v, e});
        inc[v].push_back({u, e});
    }
}

void SolverTables::set_matching(int e, const std::vector<std::pair<int, int>>& pairs) {
    std::fill(to_hi[e].begin(), to_hi[e].end(), -1);
    std::fill(to_lo[e].begin(), to_lo[e].end(), -1);
    for (auto [i, j] : pairs) {
        to_hi[e][i] = j;
        to_lo[e][j] = i;
    }
}

namespace {

struct Search {
    const SolverTables& t;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> avail;
    std::vector<int> choice;
    std::vector<char> decided;
    std::vector<int> undecided_nbrs;

    explicit Search(const SolverTables& t_, std::uint64_t mn) : t(t_), max_nodes(mn) {
        avail.resize(t.n);
        choice.assign(t.n, -1);
        decided.assign(t.n, 0);
        undecided_nbrs.assign(t.n, 0);
        for (int v = 0; v < t.n; v++) {
            avail[v] = t.list_size[v] >= 64 ? ~0ull
                                            : ((1ull << t.list_size[v]) - 1);
            undecided_nbrs[v] = (int)t.inc[v].size();
        }
    }

    // removes the partner of color c (at vertex v along edge e) from w's fiber;
    // returns the removed bit or 0
    std::uint64_t strike(int v, int w, int e, int c) {
        int p = t.edges[e].first == v ? t.to_hi[e][c] : t.to_lo[e][c];
        if (p < 0) return 0;
        std::uint64_t bit = 1ull << p;
        if (!(avail[w] & bit)) return 0;
        avail[w] &= ~bit;
        return bit;
    }

    bool greedy_applies() const {
        for (int v = 0; v < t.n; v++)
            if (!decided[v] && std::popcount(avail[v]) <= undecided_nbrs[v])
                return false;
        return true;
    }

    // assumes greedy_applies(); always succeeds
    void greedy_finish() {
        for (int v = 0; v < t.n; v++) {
            if (decided[v]) continue;
            int c = std::countr_zero(avail[v]);
            choice[v] = c;
            decided[v] = 1;
            for (auto [w, e] : t.inc[v])
                if (!decided[w]) {
                    strike(v, w, e, c);
                    undecided_nbrs[w]--;
                }
        }
    }

    bool run() {
        int best = -1, bestcnt = 1 << 30;
        bool all_done = true;
        for (int v = 0; v < t.n; v++) {
            if (decided[v]) continue;
            all_done = false;
            int cnt = std::popcount(avail[v]);
            if (cnt == 0) return false;
            if (cnt < bestcnt || (cnt == bestcnt && v < best)) {
                bestcnt = cnt;
                best = v;
            }
        }
        if (all_done) return true;
        if (greedy_applies()) {
            greedy_finish();
            return true;
        }
        int v = best;
        std::uint64_t options = avail[v];
        decided[v] = 1;
        for (auto [w, e] : t.inc[v])
            if (!decided[w]) undecided_nbrs[w]--;
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            if (++nodes > max_nodes)
                throw budget_error("transversal search: node budget exceeded", 0,
                                   (double)max_nodes);
            choice[v] = c;
            bool ok = true;
            std::vector<std::pair<int, std::uint64_t>> trail;
            for (auto [w, e] : t.inc[v]) {
                if (decided[w]) continue;
                std::uint64_t bit = strike(v, w, e, c);
                if (bit) trail.push_back({w, bit});
                if (avail[w] == 0) { ok = false; break; }
            }
            if (ok && run()) return true;
            for (auto [w, bit] : trail) avail[w] |= bit;
        }
        decided[v] = 0;
        choice[v] = -1;
        for (auto [w, e] : t.inc[v])
            if (!decided[w]) undecided_nbrs[w]++;
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> solve_transversal(const SolverTables& t,
                                                  std::uint64_t max_nodes,
                                                  std::uint64_t* nodes_used) {
    for (int v = 0; v < t.n; v++) {
        if (t.list_size[v] > 63)
            throw input_error("transversal search: fibers larger than 63 unsupported");
        if (t.list_size[v] <= 0) return std::nullopt;
    }
    Search s(t, max_nodes);
    bool ok = s.run();
    if (nodes_used) *nodes_used += s.nodes;
    if (!ok) return std::nullopt;
    return s.choice;
}

} // namespace dpsq
