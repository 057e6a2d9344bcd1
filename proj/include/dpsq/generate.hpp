#pragma once
#include <string>
#include <vector>

#include "dpsq/graph.hpp"

namespace dpsq {

// A generated graph plus its boundary markers.  Boundary vertices stand for
// "attached to the rest of a larger host graph here": reducibility checks
// treat them as external 3-vertices in the worst case.  Closed configurations
// have an empty boundary.
struct Generated {
    Graph g;
    std::vector<int> boundary;
};

// Named constructions:
//   cycle N        path N        complete N      petersen
//   theta A B C    three internally disjoint threads of A,B,C degree-2
//                  vertices between two 3-vertices (at most one of A,B,C zero;
//                  a zero means a direct edge between the hubs)
//   f23            K_{2,3} (same as theta 1 1 1)
//   y A B C        3-vertex with three branches of A,B,C degree-2 vertices,
//                  each branch capped by a boundary vertex
//   face M         cycle of length M whose first vertex carries one boundary
//                  pendant (the unique 3-vertex of the face)
//   lemma5 I       I in 1..6, the five-color reducible configurations
//   lemma6 I       I in 1..3, the six-color reducible configurations
// Unknown names or bad parameters raise input_error.
Generated generate(const std::string& name, const std::vector<int>& params);

} // namespace dpsq
