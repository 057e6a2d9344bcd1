#include "dpsq/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "dpsq/errors.hpp"
#include "dpsq/generate.hpp"
#include "dpsq/iso.hpp"
#include "dpsq/transversal_solver.hpp"

namespace dpsq {

std::vector<int> residual_sizes(const Configuration& cfg) {
    std::vector<int> s(cfg.internal.size());
    for (int i = 0; i < (int)cfg.internal.size(); i++)
        s[i] = std::max(0, cfg.k - cfg.ext2[i]);
    return s;
}

Graph internal_square(const Configuration& cfg) {
    return induced_subgraph(square(cfg.r), cfg.internal);
}

void validate_configuration(const Configuration& cfg) {
    require_subcubic(cfg.r, "configuration");
    if (cfg.internal.empty())
        throw input_error("configuration has no internal vertices");
    if (cfg.internal.size() != cfg.ext2.size())
        throw input_error("configuration needs one ext2 value per internal vertex");
    for (int i = 0; i < (int)cfg.internal.size(); i++) {
        int v = cfg.internal[i];
        if (v < 0 || v >= cfg.r.n)
            throw input_error("internal vertex out of range");
        if (i > 0 && cfg.internal[i - 1] >= v)
            throw input_error("internal vertices must be strictly increasing");
        if (cfg.ext2[i] < 0)
            throw input_error("negative ext2");
    }
    Graph rsq = square(cfg.r);
    for (int i = 0; i < (int)cfg.internal.size(); i++)
        if (cfg.ext2[i] + (int)rsq.adj[cfg.internal[i]].size() > 9)
            throw input_error("ext2 exceeds the subcubic square-degree budget of 9");
}

std::optional<std::vector<int>> find_greedy_order(const Graph& sq,
                                                  const std::vector<int>& sizes) {
    if ((int)sizes.size() != sq.n)
        throw input_error("find_greedy_order: one size per vertex required");
    if (sq.n > 20)
        throw input_error("find_greedy_order: more than 20 vertices");
    int t = sq.n;
    std::vector<std::uint32_t> nbr(t, 0);
    for (int v = 0; v < t; v++)
        for (int w : sq.adj[v]) nbr[v] |= 1u << w;
    std::vector<char> failed(std::size_t(1) << t, 0);
    std::vector<int> order;
    auto rec = [&](auto&& self, std::uint32_t mask) -> bool {
        if (mask + 1 == (1u << t)) return true;
        if (failed[mask]) return false;
        for (int v = 0; v < t; v++) {
            if (mask & (1u << v)) continue;
            if (sizes[v] > __builtin_popcount(nbr[v] & mask)) {
                order.push_back(v);
                if (self(self, mask | (1u << v))) return true;
                order.pop_back();
            }
        }
        failed[mask] = 1;
        return false;
    };
    if (t == 0) return order;
    if (rec(rec, 0)) return order;
    return std::nullopt;
}

namespace {

double comb_d(int n, int k) {
    double r = 1;
    for (int i = 0; i < k; i++) r = r * (n - i) / (i + 1);
    return r;
}

double perm_d(int n, int k) {
    double r = 1;
    for (int i = 0; i < k; i++) r *= n - i;
    return r;
}

// Lexicographic successor of a strictly increasing k-subset of [0, limit);
// wraps to the first subset and returns false.
bool next_combination(std::vector<int>& c, int limit) {
    int len = (int)c.size();
    for (int pos = len - 1; pos >= 0; pos--) {
        if (c[pos] < limit - (len - pos)) {
            c[pos]++;
            for (int q = pos + 1; q < len; q++) c[q] = c[q - 1] + 1;
            return true;
        }
    }
    std::iota(c.begin(), c.end(), 0);
    return false;
}

// Lexicographic successor of an arrangement (sequence of distinct values in
// [0, limit)); wraps to 0,1,2,... and returns false.
bool next_arrangement(std::vector<int>& a, int limit) {
    int len = (int)a.size();
    std::vector<char> used(limit, 0);
    for (int x : a) used[x] = 1;
    for (int pos = len - 1; pos >= 0; pos--) {
        used[a[pos]] = 0;
        int v = a[pos] + 1;
        while (v < limit && used[v]) v++;
        if (v < limit) {
            a[pos] = v;
            used[v] = 1;
            int w = 0;
            for (int q = pos + 1; q < len; q++) {
                while (used[w]) w++;
                a[q] = w;
                used[w] = 1;
            }
            return true;
        }
    }
    std::iota(a.begin(), a.end(), 0);
    return false;
}

struct Slot {
    enum Kind { fixed_prefix, subset, arrangement };
    int e = 0;
    Kind kind = arrangement;
    int dom = 0, cod = 0;   // fiber sizes: matching embeds [dom] into [cod]
    bool dom_is_lo = true;  // domain fiber sits on the lower endpoint id
    std::vector<int> state; // current image (combination or arrangement)
    double count = 1;
};

std::vector<std::pair<int, int>> slot_pairs(const Slot& s) {
    std::vector<std::pair<int, int>> pairs;
    int len = s.kind == Slot::fixed_prefix ? s.dom : (int)s.state.size();
    pairs.reserve(len);
    for (int i = 0; i < len; i++) {
        int image = s.kind == Slot::fixed_prefix ? i : s.state[i];
        if (s.dom_is_lo)
            pairs.push_back({i, image});
        else
            pairs.push_back({image, i});
    }
    return pairs;
}

bool slot_next(Slot& s) {
    switch (s.kind) {
        case Slot::fixed_prefix: return false;
        case Slot::subset: return next_combination(s.state, s.cod);
        case Slot::arrangement: return next_arrangement(s.state, s.cod);
    }
    return false;
}

} // namespace

ExhaustResult verify_reducible_exhaustive(const Configuration& cfg,
                                          const ExhaustOptions& opts) {
    validate_configuration(cfg);
    Graph h = internal_square(cfg);
    std::vector<int> sizes = residual_sizes(cfg);
    std::vector<Edge> es = h.edges();
    int m = (int)es.size();

    // BFS forest; the discovered endpoint of a tree edge is the child
    std::vector<int> par_edge(h.n, -1);
    std::vector<char> tree(m, 0);
    if (opts.normalized) {
        std::map<Edge, int> eidx;
        for (int e = 0; e < m; e++) eidx[es[e]] = e;
        std::vector<char> seen(h.n, 0);
        for (int s = 0; s < h.n; s++) {
            if (seen[s]) continue;
            seen[s] = 1;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : h.adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        int e = eidx[{std::min(v, w), std::max(v, w)}];
                        par_edge[w] = e;
                        tree[e] = 1;
                        q.push(w);
                    }
            }
        }
    }

    std::vector<Slot> slots(m);
    ExhaustResult res;
    res.space_estimate = 1;
    for (int e = 0; e < m; e++) {
        auto [u, v] = es[e];
        Slot& s = slots[e];
        s.e = e;
        if (tree[e]) {
            int child = par_edge[u] == e ? u : v;
            int parent = child == u ? v : u;
            int sc = sizes[child], sp = sizes[parent];
            if (sc <= sp) {
                s.kind = Slot::subset;
                s.dom = sc;
                s.cod = sp;
                s.dom_is_lo = child == u;
                s.state.resize(sc);
                std::iota(s.state.begin(), s.state.end(), 0);
                s.count = comb_d(sp, sc);
            } else {
                s.kind = Slot::fixed_prefix;
                s.dom = sp;
                s.cod = sc;
                s.dom_is_lo = parent == u;
                s.count = 1;
            }
        } else {
            s.kind = Slot::arrangement;
            bool u_small = sizes[u] <= sizes[v];
            s.dom = u_small ? sizes[u] : sizes[v];
            s.cod = u_small ? sizes[v] : sizes[u];
            s.dom_is_lo = u_small;
            s.state.resize(s.dom);
            std::iota(s.state.begin(), s.state.end(), 0);
            s.count = perm_d(s.cod, s.dom);
        }
        res.space_estimate *= s.count;
    }

    SolverTables tab;
    tab.init(h.n, sizes, es);
    for (const Slot& s : slots) tab.set_matching(s.e, slot_pairs(s));

    while (true) {
        if (res.covers_checked >= (long long)opts.budget.max_covers)
            throw budget_error("configuration check: cover budget exceeded",
                               res.covers_checked, res.space_estimate);
        auto tr = solve_transversal(tab, opts.budget.max_nodes);
        res.covers_checked++;
        if (!tr) {
            res.reducible = false;
            Cover cx;
            cx.base = h;
            cx.list_size = sizes;
            cx.matching.resize(m);
            for (const Slot& s : slots) cx.matching[s.e] = slot_pairs(s);
            res.counterexample = std::move(cx);
            return res;
        }
        int i = m - 1;
        for (; i >= 0; i--) {
            bool advanced = slot_next(slots[i]);
            tab.set_matching(slots[i].e, slot_pairs(slots[i]));
            if (advanced) break;
        }
        if (i < 0) break;
    }
    return res;
}

namespace {

// All partitions of {0..count-1} as restricted-growth strings.
void all_partitions(int count, std::vector<std::vector<int>>& out) {
    std::vector<int> a(count, 0);
    auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == count) {
            out.push_back(a);
            return;
        }
        for (int b = 0; b <= maxb + 1; b++) {
            a[i] = b;
            self(self, i + 1, std::max(maxb, b));
        }
    };
    if (count == 0)
        out.push_back({});
    else
        rec(rec, 0, -1);
}

} // namespace

std::vector<ConfigVariant> lemma_variants(const Graph& r,
                                          const std::vector<int>& boundary,
                                          int k) {
    require_subcubic(r, "lemma_variants");
    std::vector<char> is_stub(r.n, 0);
    for (int b : boundary) {
        if (b < 0 || b >= r.n) throw input_error("boundary vertex out of range");
        if (is_stub[b]) throw input_error("repeated boundary vertex");
        is_stub[b] = 1;
        if (r.adj[b].size() != 1)
            throw input_error("boundary stubs must have degree 1");
    }
    std::vector<int> attach(boundary.size());
    for (int i = 0; i < (int)boundary.size(); i++) {
        attach[i] = r.adj[boundary[i]][0];
        if (is_stub[attach[i]])
            throw input_error("boundary stub attached to another stub");
    }
    std::vector<int> internal;
    for (int v = 0; v < r.n; v++)
        if (!is_stub[v]) internal.push_back(v);
    if (internal.empty()) throw input_error("configuration has no internal vertices");
    std::vector<int> new_id(r.n, -1);
    for (int i = 0; i < (int)internal.size(); i++) new_id[internal[i]] = i;
    int t = (int)internal.size();

    std::vector<std::vector<int>> parts;
    all_partitions((int)boundary.size(), parts);

    std::vector<ConfigVariant> variants;
    for (const auto& rgs : parts) {
        int nblocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(nblocks);
        for (int i = 0; i < (int)rgs.size(); i++) blocks[rgs[i]].push_back(i);
        bool ok = true;
        for (const auto& blk : blocks) {
            if (blk.size() > 3) ok = false;
            std::set<int> at;
            for (int s : blk)
                if (!at.insert(attach[s]).second) ok = false;
        }
        if (!ok) continue;

        std::vector<std::pair<int, int>> edges;
        for (int v : internal)
            for (int w : r.adj[v])
                if (!is_stub[w] && v < w) edges.push_back({new_id[v], new_id[w]});
        std::vector<int> orig(internal);
        for (int b = 0; b < nblocks; b++) {
            int ub = t + b;
            orig.push_back(boundary[blocks[b][0]]);
            for (int s : blocks[b]) edges.push_back({new_id[attach[s]], ub});
        }
        ConfigVariant var;
        var.cfg.r = build_graph(t + nblocks, edges);
        var.cfg.k = k;
        var.cfg.internal.resize(t);
        std::iota(var.cfg.internal.begin(), var.cfg.internal.end(), 0);
        var.orig = orig;

        var.cfg.ext2.assign(t, 0);
        for (int b = 0; b < nblocks; b++) {
            int ub = t + b;
            std::vector<int> dist = bfs_distances(var.cfg.r, ub);
            int spare = 3 - (int)blocks[b].size();
            for (int v = 0; v < t; v++) {
                if (dist[v] == 1)
                    var.cfg.ext2[v] += 1 + spare;
                else if (dist[v] == 2)
                    var.cfg.ext2[v] += 1;
            }
        }
        validate_configuration(var.cfg);

        bool merged = false;
        for (const auto& blk : blocks)
            if (blk.size() > 1) merged = true;
        if (nblocks == 0)
            var.label = "closed";
        else if (!merged)
            var.label = nblocks == 1 ? "host" : "separate";
        else if (boundary.size() == 2 && nblocks == 1)
            var.label = "common";
        else {
            std::string l = "merge:";
            for (int b = 0; b < nblocks; b++) {
                if (b) l += ".";
                for (int j = 0; j < (int)blocks[b].size(); j++) {
                    if (j) l += "+";
                    l += std::to_string(boundary[blocks[b][j]] + 1);
                }
            }
            var.label = l;
        }
        variants.push_back(std::move(var));
    }
    // general case (most blocks) first, fully merged hosts last
    std::stable_sort(variants.begin(), variants.end(),
                     [](const ConfigVariant& a, const ConfigVariant& b) {
                         return a.cfg.r.n > b.cfg.r.n;
                     });
    return variants;
}

std::vector<std::string> all_lemma_ids() {
    std::vector<std::string> ids{"mindeg"};
    for (int k : {5, 6})
        for (int m = 3; m <= 8; m++)
            ids.push_back("face:" + std::to_string(m) + ":" + std::to_string(k));
    for (int i = 1; i <= 6; i++) ids.push_back("5red:" + std::to_string(i));
    for (int i = 1; i <= 3; i++) ids.push_back("6red:" + std::to_string(i));
    return ids;
}

namespace {

int parse_int(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad number in lemma id: '" + s + "'");
    return std::stoi(s);
}

} // namespace

LemmaReport verify_lemma(const std::string& lemma_id, const Budget& budget) {
    struct Job {
        std::string label;
        Generated gen;
        int k;
    };
    std::vector<Job> jobs;
    bool force_exhaust = false;
    std::string iso_expect;

    if (lemma_id == "mindeg") {
        jobs.push_back({"k5", generate("mindeg", {}), 5});
        jobs.push_back({"k6", generate("mindeg", {}), 6});
    } else if (lemma_id.rfind("face:", 0) == 0) {
        std::string rest = lemma_id.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw input_error("unknown lemma id: " + lemma_id);
        int m = parse_int(rest.substr(0, colon));
        int k = parse_int(rest.substr(colon + 1));
        if (m < 3) throw input_error("face lemma needs cycle length >= 3");
        if (k != 5 && k != 6) throw input_error("face lemma is stated for k = 5 and 6");
        jobs.push_back({"", generate("face", {m}), k});
    } else if (lemma_id.rfind("5red:", 0) == 0) {
        int i = parse_int(lemma_id.substr(5));
        if (i < 1 || i > 6) throw input_error("unknown lemma id: " + lemma_id);
        jobs.push_back({"", generate("lemma5", {i}), 5});
        force_exhaust = i == 4; // "obviously colorable" in prose; ground it
        if (i == 4) iso_expect = "K4";
        if (i == 6) iso_expect = "K5";
    } else if (lemma_id.rfind("6red:", 0) == 0) {
        int i = parse_int(lemma_id.substr(5));
        if (i < 1 || i > 3) throw input_error("unknown lemma id: " + lemma_id);
        jobs.push_back({"", generate("lemma6", {i}), 6});
        if (i == 3) iso_expect = "K5";
    } else {
        throw input_error("unknown lemma id: " + lemma_id);
    }

    LemmaReport rep;
    rep.lemma_id = lemma_id;

    std::vector<std::pair<std::string, std::string>> entries;
    for (const Job& job : jobs) {
        auto variants = lemma_variants(job.gen.g, job.gen.boundary, job.k);
        for (const ConfigVariant& var : variants) {
            std::string label = job.label;
            if (variants.size() > 1)
                label += (label.empty() ? "" : ":") + var.label;

            Graph sq = internal_square(var.cfg);
            std::vector<int> sizes = residual_sizes(var.cfg);

            if (!iso_expect.empty()) {
                Graph model = generate("complete", {sq.n}).g;
                if (!is_isomorphic(sq, model)) {
                    rep.status = LemmaReport::Status::refuted;
                    entries.push_back({label, "iso-mismatch"});
                    continue;
                }
                rep.iso_note = iso_expect;
            }

            std::optional<std::vector<int>> order;
            if (!force_exhaust) order = find_greedy_order(sq, sizes);
            if (order) {
                std::string cert = "greedy:";
                for (int i = 0; i < (int)order->size(); i++) {
                    if (i) cert += ",";
                    cert += std::to_string(var.orig[(*order)[i]] + 1);
                }
                entries.push_back({label, cert});
                continue;
            }

            ExhaustOptions opts;
            opts.budget = budget;
            opts.budget.max_covers = budget.max_covers - (std::uint64_t)rep.n_covers;
            try {
                ExhaustResult er = verify_reducible_exhaustive(var.cfg, opts);
                rep.n_covers += er.covers_checked;
                rep.space_estimate += er.space_estimate;
                if (!er.reducible) {
                    rep.status = LemmaReport::Status::refuted;
                    rep.counterexample = er.counterexample;
                    rep.counterexample_label = label;
                    entries.push_back({label, "bad-cover"});
                } else {
                    entries.push_back({label, "exhausted"});
                }
            } catch (const budget_error& b) {
                rep.n_covers += b.covers_checked;
                rep.space_estimate += b.space_estimate;
                if (rep.status == LemmaReport::Status::verified)
                    rep.status = LemmaReport::Status::budget;
                entries.push_back({label, "partial"});
            }
        }
    }

    if (entries.size() == 1 && entries[0].first.empty()) {
        rep.certificate = entries[0].second;
    } else {
        for (int i = 0; i < (int)entries.size(); i++) {
            if (i) rep.certificate += ";";
            rep.certificate += entries[i].first + "=" + entries[i].second;
        }
    }
    return rep;
}

} // namespace dpsq
