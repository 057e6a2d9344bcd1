#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dpsq/budget.hpp"
#include "dpsq/cover.hpp"
#include "dpsq/graph.hpp"

namespace dpsq {

// A configuration: a small subcubic fragment r, the internal vertices that
// must always be (re)colorable, and for each internal vertex an upper bound
// ext2 on the number of square-neighbors it can have outside r in any
// subcubic host.  With k colors total an internal vertex is guaranteed a
// residual list of k - ext2 colors after the host is colored.
struct Configuration {
    Graph r;
    std::vector<int> internal; // strictly increasing vertex ids of r
    std::vector<int> ext2;     // parallel to internal
    int k = 5;
};

// max(0, k - ext2[v]) per internal vertex.
std::vector<int> residual_sizes(const Configuration& cfg);

// Throws input_error unless cfg is sane: r subcubic, internal nonempty and
// strictly increasing, ext2 parallel and nonnegative, and for every internal
// vertex ext2 + (degree in the square of r) <= 9, the most square neighbors
// any vertex of a subcubic graph can have.
void validate_configuration(const Configuration& cfg);

// Square of r restricted to the internal vertices, relabeled 0..t-1 in
// internal order.
Graph internal_square(const Configuration& cfg);

// An ordering of sq's vertices in which each vertex has strictly fewer
// earlier neighbors than its list size, or nullopt.  Such an ordering
// certifies that every cover with these list sizes admits a transversal:
// coloring greedily along it, each earlier neighbor blocks at most one color.
// Exhaustive subset search with memoization; lexicographically first order.
// input_error above 20 vertices.
std::optional<std::vector<int>> find_greedy_order(const Graph& sq,
                                                  const std::vector<int>& sizes);

struct ExhaustOptions {
    Budget budget;
    bool normalized = true; // forest-based matching normalization
};

struct ExhaustResult {
    bool reducible = true;
    long long covers_checked = 0;
    double space_estimate = 0.0;
    // cover of internal_square(cfg) with no transversal, when refuted
    std::optional<Cover> counterexample;
};

// Decides whether every cover of internal_square(cfg) with the residual list
// sizes admits a transversal.  Only full (maximal) matchings are enumerated:
// adding pairs to a matching only removes transversals, so a refuting cover
// survives extension and a verified full enumeration covers all covers.
// Normalization fixes each forest edge up to relabeling of the child fiber:
// a child no larger than its parent keeps only order-preserving embeddings
// (one per image subset), a larger child only the identity prefix.
// Throws budget_error past budget.max_covers.
ExhaustResult verify_reducible_exhaustive(const Configuration& cfg,
                                          const ExhaustOptions& opts = {});

// ---- worst-case host embeddings ------------------------------------------

// r with designated boundary stubs: a stub has degree 1 in r and stands for
// one edge from its (internal) attachment into the host.  A host may route
// several stubs into a single host vertex; since hosts are subcubic, at most
// three stubs with pairwise distinct attachments can merge.  Each way of
// partitioning the stubs yields one variant: the stub blocks become host
// vertices of the fragment and every internal vertex is charged the
// worst-case count of external square-neighbors for that shape.
struct ConfigVariant {
    std::string label; // "separate", "common", "host", "closed", ...
    Configuration cfg; // over a relabeled fragment (internal first, then blocks)
    std::vector<int> orig; // cfg vertex id -> vertex id in the original r
};

std::vector<ConfigVariant> lemma_variants(const Graph& r,
                                          const std::vector<int>& boundary,
                                          int k);

// ---- named lemma checks ---------------------------------------------------

struct LemmaReport {
    enum class Status { verified, refuted, budget };
    std::string lemma_id;
    Status status = Status::verified;
    // "greedy:<ids>" / "exhausted" per variant, joined "label=cert;..."
    std::string certificate;
    long long n_covers = 0;
    double space_estimate = 0.0;
    std::optional<Cover> counterexample;
    std::string counterexample_label; // variant that produced it
    std::string iso_note;             // "K4"/"K5" when asserted and confirmed
};

// Stable order: mindeg, face:3..8:5, face:3..8:6, 5red:1..6, 6red:1..3.
std::vector<std::string> all_lemma_ids();

// Verifies one named reducibility claim: builds the configuration, derives
// worst-case residual lists for every host variant, then proves each variant
// by greedy order certificate or exhaustive cover enumeration.
// Unknown id -> input_error.  Budget overrun -> status budget.
LemmaReport verify_lemma(const std::string& lemma_id, const Budget& budget = {});

} // namespace dpsq
