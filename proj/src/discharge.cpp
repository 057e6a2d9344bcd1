#include "dpsq/discharge.hpp"

#include <algorithm>

#include "dpsq/errors.hpp"
#include "dpsq/mad.hpp"

namespace dpsq {

ChargeLedger discharge(const Graph& g, const std::string& rule) {
    require_subcubic(g, "discharge");
    Rational amount;
    if (rule == "R1")
        amount = Rational(1, 4);
    else if (rule == "R2")
        amount = Rational(1, 5);
    else
        throw input_error("unknown discharging rule '" + rule + "' (expected R1 or R2)");
    for (int v = 0; v < g.n; v++)
        if (g.adj[v].size() < 2)
            throw input_error("discharging rules need minimum degree 2");

    ChargeLedger ledger;
    ledger.rule = rule;
    ledger.initial.reserve(g.n);
    for (int v = 0; v < g.n; v++) ledger.initial.push_back(Rational((int)g.adj[v].size()));
    ledger.final_charge = ledger.initial;
    for (int v = 0; v < g.n; v++) {
        if (g.adj[v].size() != 3) continue;
        for (int w : g.adj[v]) {
            if (g.adj[w].size() != 2) continue;
            ledger.transfers.push_back({v, w, amount});
            ledger.final_charge[v] = ledger.final_charge[v] - amount;
            ledger.final_charge[w] = ledger.final_charge[w] + amount;
        }
    }
    return ledger;
}

Rational min_final_charge(const ChargeLedger& ledger) {
    if (ledger.final_charge.empty())
        throw input_error("min_final_charge on an empty ledger");
    Rational m = ledger.final_charge[0];
    for (const Rational& r : ledger.final_charge)
        if (r < m) m = r;
    return m;
}

TheoremAudit audit_theorem(const Graph& g, int k) {
    if (k != 5 && k != 6) throw input_error("audit_theorem: k must be 5 or 6");
    TheoremAudit audit;
    audit.k = k;
    audit.rule = k == 5 ? "R1" : "R2";
    audit.bound = k == 5 ? Rational(9, 4) : Rational(12, 5);
    if (g.n == 0) {
        audit.note = "not applicable: empty graph";
        audit.passed = true;
        return audit;
    }
    audit.blocking = detect_reducible(g, k);
    if (!audit.blocking.empty()) {
        audit.note = "not applicable: reducible configuration present";
        audit.passed = true;
        return audit;
    }
    audit.applicable = true;
    ChargeLedger ledger = discharge(g, audit.rule); // configuration-free => min degree 2
    audit.min_final = min_final_charge(ledger);
    audit.mad_value = mad_exact(g);
    audit.bound_holds = !(audit.min_final < audit.bound);
    audit.mad_consistent = !(audit.mad_value < audit.min_final);
    audit.passed = audit.bound_holds && audit.mad_consistent;
    if (audit.passed)
        audit.note = "every final charge >= " + audit.bound.str() +
                     ", so a configuration-free graph has mad >= " + audit.bound.str();
    else
        audit.note = "counting argument violated";
    return audit;
}

} // namespace dpsq
