#pragma once
#include <string>
#include <vector>

#include "dpsq/detect.hpp"
#include "dpsq/graph.hpp"
#include "dpsq/rational.hpp"

namespace dpsq {

struct Transfer {
    int from, to;
    Rational amount;
};

// Full trace of one discharging run: initial charge = degree, every transfer
// materialized individually, final charges exact.
struct ChargeLedger {
    std::string rule; // "R1" (1/4) or "R2" (1/5)
    std::vector<Rational> initial;
    std::vector<Rational> final_charge;
    std::vector<Transfer> transfers;
};

// Applies R1 or R2: every 3-vertex gives the rule amount to each adjacent
// 2-vertex.  input_error if g is not subcubic, has a vertex of degree 0 or 1
// (the rules are stated for minimum degree 2), or the rule name is unknown.
ChargeLedger discharge(const Graph& g, const std::string& rule);

// Exact minimum of the final charges; input_error on an empty ledger.
Rational min_final_charge(const ChargeLedger& ledger);

// Consistency audit of the counting argument: when g is free of k-reducible
// configurations, the rule for k must leave every vertex with charge >= the
// bound (9/4 for k=5, 12/5 for k=6), which forces mad(g) >= bound — the
// contradiction that kills a minimal counterexample with mad below the bound.
struct TheoremAudit {
    int k = 5;
    std::string rule;
    bool applicable = false;          // no reducible configuration found
    std::vector<Occurrence> blocking; // why not applicable
    Rational bound;
    Rational min_final;
    Rational mad_value;
    bool bound_holds = false;   // min_final >= bound
    bool mad_consistent = false; // min_final <= mad (min <= average <= densest)
    bool passed = false;
    std::string note;
};

TheoremAudit audit_theorem(const Graph& g, int k);

} // namespace dpsq
