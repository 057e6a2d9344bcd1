#include "dpsq/io.hpp"

#include <sstream>
#include <string>

#include "dpsq/errors.hpp"

namespace dpsq {

namespace {

// whitespace-split; empty for blank lines
std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> t;
    std::string w;
    while (ss >> w) t.push_back(w);
    return t;
}

long parse_long(const std::string& s, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw input_error(std::string("bad ") + what + ": '" + s + "'");
    }
    if (pos != s.size())
        throw input_error(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

int parse_vertex(const std::string& s, int n) {
    long v = parse_long(s, "vertex");
    if (v < 1 || v > n)
        throw input_error("vertex " + s + " out of range 1.." + std::to_string(n));
    return (int)v - 1;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (n >= 0) throw input_error("repeated p line");
            if (t.size() != 4 || t[1] != "edge")
                throw input_error("expected 'p edge <n> <m>'");
            n = (int)parse_long(t[2], "vertex count");
            m = parse_long(t[3], "edge count");
            if (n < 0 || m < 0) throw input_error("negative counts in p line");
        } else if (t[0] == "e") {
            if (n < 0) throw input_error("edge before p line");
            if (t.size() != 3) throw input_error("expected 'e <u> <v>'");
            int u = parse_vertex(t[1], n), v = parse_vertex(t[2], n);
            if (u == v) throw input_error("loop edge at vertex " + t[1]);
            Edge e{std::min(u, v), std::max(u, v)};
            for (const Edge& prev : edges)
                if (prev == e)
                    throw input_error("duplicate edge " + t[1] + " " + t[2]);
            edges.push_back(e);
        } else {
            throw input_error("unknown line type '" + t[0] + "'");
        }
    }
    if (n < 0) throw input_error("missing p line");
    if ((long)edges.size() != m)
        throw input_error("p line declares " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return build_graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<int>* boundary) {
    if (boundary && !boundary->empty()) {
        out << "c boundary";
        for (int v : *boundary) out << " " << v + 1;
        out << "\n";
    }
    std::vector<Edge> es = g.edges();
    out << "p edge " << g.n << " " << es.size() << "\n";
    for (const Edge& e : es) out << "e " << e.first + 1 << " " << e.second + 1 << "\n";
}

Cover read_cover(std::istream& in, const Graph& base) {
    std::vector<int> sizes(base.n, -1);
    std::vector<std::pair<Edge, std::vector<std::pair<int, int>>>> matchings;
    std::string line;
    while (std::getline(in, line)) {
        auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "l") {
            if (t.size() != 3) throw input_error("expected 'l <v> <size>'");
            int v = parse_vertex(t[1], base.n);
            if (sizes[v] >= 0) throw input_error("repeated list size for vertex " + t[1]);
            long s = parse_long(t[2], "list size");
            if (s < 0) throw input_error("negative list size");
            sizes[v] = (int)s;
        } else if (t[0] == "m") {
            if (t.size() < 3) throw input_error("expected 'm <u> <v> <i>:<j> ...'");
            int u = parse_vertex(t[1], base.n), v = parse_vertex(t[2], base.n);
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 3; i < t.size(); i++) {
                auto colon = t[i].find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == t[i].size())
                    throw input_error("bad matching pair '" + t[i] + "'");
                pairs.push_back({(int)parse_long(t[i].substr(0, colon), "color index"),
                                 (int)parse_long(t[i].substr(colon + 1), "color index")});
            }
            matchings.push_back({{u, v}, pairs});
        } else {
            throw input_error("unknown line type '" + t[0] + "' in cover");
        }
    }
    for (int v = 0; v < base.n; v++)
        if (sizes[v] < 0)
            throw input_error("missing list size for vertex " + std::to_string(v + 1));
    return build_cover(base, sizes, matchings);
}

void write_cover(std::ostream& out, const Cover& c) {
    for (int v = 0; v < c.base.n; v++) out << "l " << v + 1 << " " << c.list_size[v] << "\n";
    std::vector<Edge> es = c.base.edges();
    for (int e = 0; e < (int)es.size(); e++) {
        if (c.matching[e].empty()) continue;
        out << "m " << es[e].first + 1 << " " << es[e].second + 1;
        for (auto [i, j] : c.matching[e]) out << " " << i << ":" << j;
        out << "\n";
    }
}

void write_transversal(std::ostream& out, const Transversal& t) {
    for (int v = 0; v < (int)t.size(); v++) out << "t " << v + 1 << " " << t[v] << "\n";
}

} // namespace dpsq
