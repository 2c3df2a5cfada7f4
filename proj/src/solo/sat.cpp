#include <cstdlib>
#include <string>

#include "solo/reduction.h"

namespace solo {

namespace {

// Vertex layout of the compiled DAG (m clauses, n variables).
struct DagLayout {
    int m = 0;
    int n = 0;
    int clause(int i) const { return i - 1; }
    int trueV(int j) const { return m + 3 * (j - 1); }
    int falseV(int j) const { return m + 3 * (j - 1) + 1; }
    int mergeV(int j) const { return m + 3 * (j - 1) + 2; }
    int sink() const { return m + 3 * n; }
    int occurrence(int lit) const { return lit > 0 ? trueV(lit) : falseV(-lit); }
};

}  // namespace

ReductionOutput threeSatToDag(const CnfFormula& phi,
                              const std::optional<std::vector<bool>>& assignment) {
    phi.validate();
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.variableCount;
    const DagLayout L{m, n};

    ReductionOutput out;
    CaptureGraph g;
    g.directed = true;
    g.maxBudget = 2;
    g.budgets.assign(static_cast<std::size_t>(m + 3 * n + 1), 2);
    for (int i = 1; i <= m; ++i) {
        out.provenance["clause " + std::to_string(i)] = {std::to_string(L.clause(i))};
        for (int lit : phi.clauses[static_cast<std::size_t>(i - 1)]) {
            g.edges.push_back({L.clause(i), L.occurrence(lit)});
        }
    }
    for (int j = 1; j <= n; ++j) {
        g.edges.push_back({L.trueV(j), L.mergeV(j)});
        g.edges.push_back({L.falseV(j), L.mergeV(j)});
        g.edges.push_back({L.mergeV(j), L.sink()});
        out.provenance["variable " + std::to_string(j)] = {
            std::to_string(L.trueV(j)), std::to_string(L.falseV(j)), std::to_string(L.mergeV(j))};
    }
    out.provenance["sink"] = {std::to_string(L.sink())};
    g.validate();
    out.graph = g;

    if (assignment) {
        const std::vector<bool>& bits = *assignment;
        if (static_cast<int>(bits.size()) != n)
            throw MalformedInstance("assignment length does not match the variable count");
        if (!phi.satisfiedBy(bits))
            throw MalformedInstance("assignment does not satisfy the formula");

        GraphCaptureSequence w;
        // Phase 1: each clause token captures the occurrence vertex of its
        // satisfied literal with the least variable index. Every clause token
        // therefore lands on the assignment side of its variable.
        for (int i = 1; i <= m; ++i) {
            int bestLit = 0;
            for (int lit : phi.clauses[static_cast<std::size_t>(i - 1)]) {
                const int j = std::abs(lit);
                if ((lit > 0) == bits[static_cast<std::size_t>(j - 1)]) {
                    if (bestLit == 0 || j < std::abs(bestLit)) bestLit = lit;
                }
            }
            w.push_back({L.clause(i), L.occurrence(bestLit)});
        }
        // Phase 2: per variable, the assignment-side token folds into the
        // merge vertex first; the opposite side still holds its untouched
        // token, which follows and keeps a capture in hand.
        for (int j = 1; j <= n; ++j) {
            const int first = bits[static_cast<std::size_t>(j - 1)] ? L.trueV(j) : L.falseV(j);
            const int second = bits[static_cast<std::size_t>(j - 1)] ? L.falseV(j) : L.trueV(j);
            w.push_back({first, L.mergeV(j)});
            w.push_back({second, L.mergeV(j)});
        }
        // Phase 3: the merge tokens drain into the sink.
        for (int j = 1; j <= n; ++j) w.push_back({L.mergeV(j), L.sink()});

        if (!verifyGraphSequence(g, w).success)
            throw Error("embedded clearing sequence failed verification; this is a library bug");
        out.embeddedGraphWitness = std::move(w);
    }
    return out;
}

}  // namespace solo
