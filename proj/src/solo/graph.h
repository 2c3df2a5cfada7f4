#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solo/errors.h"

namespace solo {

// Token-capture game on a graph: one token per vertex initially, each with a
// capture budget. A token on u may capture a token on v when the edge u->v
// exists (for undirected graphs, when {u,v} is an edge); it relocates to v
// and its budget drops by one. The instance is solvable when a capture
// sequence leaves exactly one token.
struct CaptureGraph {
    bool directed = false;
    int maxBudget = 2;
    std::vector<int> budgets;                 // per-vertex, ids are 0..V-1
    std::vector<std::pair<int, int>> edges;   // directed: (from, to); undirected: stored (min, max)

    int vertexCount() const { return static_cast<int>(budgets.size()); }

    // Checks vertex ids in range, no self-loops, no duplicate edges, budgets
    // within [0, maxBudget]. Throws MalformedInstance on violation.
    void validate() const;

    // Adjacency in capture direction: undirected edges contribute both ways.
    std::vector<std::vector<int>> captureNeighbors() const;

    // Adjacency of the underlying undirected graph.
    std::vector<std::vector<int>> underlyingNeighbors() const;

    bool underlyingConnected() const;
};

// One capture: the token on `from` takes the token on `to`.
struct GraphMove {
    int from = 0;
    int to = 0;
    friend constexpr bool operator==(const GraphMove&, const GraphMove&) = default;
};

using GraphCaptureSequence = std::vector<GraphMove>;

std::string to_string(const GraphMove& m);

struct GraphSolveOptions {
    // Require the final token to sit on this vertex.
    std::optional<int> targetVertex;
    // Require the final token to retain at least this much budget.
    int requireLeftoverBudget = 0;
    // Abort with SearchBudgetExceeded beyond this many expanded states.
    std::uint64_t stateCap = 10'000'000;
    bool memoize = true;
};

struct GraphSolveResult {
    bool solvable = false;
    std::optional<GraphCaptureSequence> witness;
    std::uint64_t statesExplored = 0;
    std::optional<int> targetVertex;  // where the witness's final token sits
};

// Exhaustive memoized search over capture states. Deterministic: children are
// expanded in a fixed documented order (victim budget ascending, attacker
// budget descending, then victim id, then attacker id — the order that was
// measured to shrink the search on hard instances), and the witness is the
// first solution in that order. Throws SearchBudgetExceeded past the cap.
GraphSolveResult solveGraphExact(const CaptureGraph& g, const GraphSolveOptions& options = {});

// Same search restricted to edge direction; requires a directed acyclic graph
// (throws MalformedInstance otherwise).
GraphSolveResult solveDagExact(const CaptureGraph& g, const GraphSolveOptions& options = {});

struct GraphVerificationReport {
    bool success = false;
    std::optional<std::size_t> failedIndex;
    std::string reason;
    std::size_t remainingTokens = 0;
    std::optional<int> finalVertex;
    std::optional<int> finalBudget;
    // For undirected instances solved by a full sequence, whether the set of
    // distinct edges used forms a spanning tree of the vertex set.
    bool usedEdgesFormSpanningTree = false;
};

// Replays `seq` from the initial position; succeeds iff every capture is
// legal and exactly one token remains. Illegal moves are reported, not
// thrown.
GraphVerificationReport verifyGraphSequence(const CaptureGraph& g, const GraphCaptureSequence& seq);

}  // namespace solo
