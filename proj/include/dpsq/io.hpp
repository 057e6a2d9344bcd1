#pragma once
#include <istream>
#include <ostream>
#include <vector>

#include "dpsq/cover.hpp"
#include "dpsq/graph.hpp"

namespace dpsq {

// DIMACS-like graph files.  `c ...` comment lines anywhere; one
// `p edge <n> <m>` header before the edges; exactly m lines `e <u> <v>` with
// 1-based distinct endpoints.  Strict: wrong counts, loops, duplicates,
// out-of-range endpoints and unknown line types are input_errors.
Graph read_graph(std::istream& in);

// Writer emits edges sorted lexicographically; a nonempty boundary list adds
// a leading `c boundary <v...>` comment (1-based).
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<int>* boundary = nullptr);

// Cover files against a known base graph: one `l <v> <size>` line per vertex,
// then `m <u> <v> <i>:<j> [<i>:<j> ...]` lines for edges with nonempty
// matchings (1-based vertices, 0-based color indices).
Cover read_cover(std::istream& in, const Graph& base);
void write_cover(std::ostream& out, const Cover& c);

// `t <v> <i>` per vertex (1-based vertex, 0-based color index).
void write_transversal(std::ostream& out, const Transversal& t);

} // namespace dpsq
