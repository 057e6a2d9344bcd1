#pragma once
#include <string>
#include <vector>

#include "dpsq/graph.hpp"

namespace dpsq {

// One found reducible configuration: a kind tag and the vertices realizing it.
struct Occurrence {
    std::string kind;
    std::vector<int> vertices;
};

// All occurrences of the k-reducible configurations in g.
//
// k=5: "0-vertex", "1-vertex", "3-thread" (three consecutive 2-vertices),
//      "face" (cycle with exactly one 3-vertex), "cycle-component"
//      (2-regular component), "3-face-pendants" (triangle whose two
//      3-vertices carry pendant 2-vertices), "4-face-pendants" (4-cycle whose
//      two adjacent 3-vertices carry pendant 2-vertices), "double-3-face"
//      (two triangles sharing an edge), "double-4-face" (two 4-cycles sharing
//      an edge), "3-4-face" (a triangle and a 4-cycle sharing an edge).
// k=6: "0-vertex", "1-vertex", "2-thread", "face", "cycle-component",
//      "4-face-nonadjacent" (4-cycle whose only 3-vertices are opposite),
//      "f23" (K_{2,3} component).
//
// input_error unless g is subcubic and k is 5 or 6.
std::vector<Occurrence> detect_reducible(const Graph& g, int k);

struct StructureViolation {
    int vertex;
    std::vector<int> profile;
};

// Audit of the minimal-graph structure claims.  Only applicable when g has no
// k-reducible configuration; then every 3-vertex must have a branch profile
// within (2,2,2) for k=5 — tightening to (0,2,2) on both ends of an edge
// between 3-vertices — and equal to (1,1,1) or within (0,1,1) for k=6.
struct StructureAudit {
    bool applicable = false;              // no reducible occurrence found
    std::vector<Occurrence> blocking;     // what made it inapplicable
    std::vector<StructureViolation> violations;
    bool passed = false;                  // no violations (vacuous if blocked)
};

StructureAudit audit_minimal_structure(const Graph& g, int k);

} // namespace dpsq
