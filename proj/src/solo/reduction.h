#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solo/board.h"
#include "solo/graph.h"

namespace solo {

// Red-blue domination: choose at most k red vertices so that every blue
// vertex has a chosen neighbor. Red ids are 1..redCount, blue ids are
// 1..blueCount, and edges always join a red vertex to a blue one.
struct RBDSInstance {
    int redCount = 0;
    int blueCount = 0;
    int k = 1;
    std::vector<std::pair<int, int>> edges;  // (red, blue)

    // Ids in range, no duplicate edges, k >= 1. Throws MalformedInstance.
    void validate() const;

    // result[j-1] = sorted red neighbors of blue vertex j.
    std::vector<std::vector<int>> redNeighborsByBlue() const;

    // True if every blue vertex has a neighbor among `reds`.
    bool dominates(const std::vector<int>& reds) const;

    // Lexicographically first dominating set of size <= k, if one exists,
    // found by subset enumeration. Exponential; reference use only.
    std::optional<std::vector<int>> solveByEnumeration() const;
};

// Variant where the red vertices are partitioned into k equal-size classes
// and a valid selection takes exactly one red vertex per class; the chosen
// vertices must dominate every blue vertex. The base instance's k doubles as
// the class count.
struct ColorfulRBDSInstance {
    RBDSInstance base;
    std::vector<int> classOf;  // classOf[i-1] = class (1..k) of red vertex i

    int classCount() const { return base.k; }

    // Base validity plus: classOf covers every red vertex with class ids in
    // range and all classes the same size. Throws MalformedInstance.
    void validate() const;

    // result[j-1] = sorted red ids in class j.
    std::vector<std::vector<int>> redsByClass() const;

    // True if `choice` picks one red vertex from each class (choice[j-1] in
    // class j) and the picks dominate every blue vertex.
    bool validSelection(const std::vector<int>& choice) const;

    // Lexicographically first valid selection, if one exists, by enumerating
    // one pick per class. Exponential; reference use only.
    std::optional<std::vector<int>> solveByEnumeration() const;
};

// CNF formula with at most three literals per clause. A literal is a nonzero
// integer: +v for variable v, -v for its negation.
struct CnfFormula {
    int variableCount = 0;
    std::vector<std::vector<int>> clauses;

    // Variables in range, no duplicate literal inside a clause, and between
    // one and three literals per clause (an empty clause would only encode
    // "unsatisfiable" and is rejected as malformed input instead).
    // Throws MalformedInstance.
    void validate() const;

    bool satisfiedBy(const std::vector<bool>& assignment) const;

    // First satisfying assignment in truth-table order, if any. Exponential;
    // reference use only.
    std::optional<std::vector<bool>> solveByEnumeration() const;
};

// Result of an instance compiler: the produced game instance (a board or a
// capture graph), a provenance map from source entities (for example
// "red 2", "clause 1") to the squares or vertex ids they became, and, when a
// solution of the source instance was supplied, an embedded capture sequence
// that clears the produced instance and passes verification.
struct ReductionOutput {
    std::optional<Configuration> board;
    std::optional<CaptureGraph> graph;
    std::map<std::string, std::vector<std::string>> provenance;
    std::optional<CaptureSequence> embeddedWitness;
    std::optional<GraphCaptureSequence> embeddedGraphWitness;
};

// Compiles a red-blue domination instance (n reds, m blues, budget k) into an
// all-rook board on a (2m+1) x (n+m+k+1) grid:
//   - a 1-rook at (2m+1, i) for every red vertex i;
//   - per blue vertex j, a 1-rook at (2j-1, l) for each red neighbor l and a
//     2-rook at (2j-1, n+j);
//   - k 2-rooks at (2m+1, n+m+l) for l in [k];
//   - one 1-rook on the final cell (2m+1, n+m+k+1).
// The board clears onto that final cell exactly when the instance has a
// dominating set of size at most k. (Without the final-cell constraint the
// board grants one extra unit of domination budget: the surviving rook's own
// last capture can stand in for one more chosen red vertex.)
ReductionOutput rbdsToRooks(const RBDSInstance& inst);

// The distinguished final cell of the compiled board: (2m+1, n+m+k+1).
Square rbdsTargetSquare(const RBDSInstance& inst);

// Builds the full clearing sequence of the compiled board from a dominating
// set: per blue row the terminal rooks collapse onto the chosen neighbor's
// column (nearest first on each side), the collectors pick the stacks up and
// deliver them onto the top file (highest row first so the file is clear),
// and the top file is then cleared onto the final cell as a one-dimensional
// instance. `chosenNeighbor` may pin which dominating neighbor a blue vertex
// collapses onto; the smallest-index one is used by default. The result
// passes verifySequence and ends on rbdsTargetSquare. Throws
// InvalidDominatingSet if some blue vertex is undominated, the set exceeds k,
// or a pinned choice is not a dominating neighbor.
CaptureSequence rbdsWitnessToSequence(const RBDSInstance& inst,
                                      const std::vector<int>& dominatingSet,
                                      const std::map<int, int>& chosenNeighbor = {});

// Spreads an all-rook board into an all-queen board by multiplying every x
// coordinate by (spacing+1): file attacks survive unchanged, and the empty
// columns keep the new diagonal and rank lines from connecting pieces the
// rook board did not already connect. Default spacing is the squared piece
// count. Throws MalformedInstance unless every piece is a rook;
// PlacementOverflow if a stretched coordinate no longer fits.
Configuration rooksToQueens(const Configuration& config, std::optional<int> spacing = {});

// Rewrites an all-queen board with budgets in {1, 2} into one whose budgets
// are all exactly 2: each 1-queen is upgraded to a 2-queen and gains a
// supporting 2-queen placed on the first north-west diagonal offset (1, 2,
// 3, ...) from which the support attacks its partner and nothing else.
// Forward-preserving: a clearing of the input extends to a clearing of the
// output by spending each partner's extra capture on its support. (The
// reverse direction can fail on dense boards: the support pairs occasionally
// make an unsolvable board solvable.) Throws MalformedInstance on non-queen
// pieces or budgets outside {1, 2}; PlacementOverflow when some 1-queen has
// no attack-free offset within `offsetBound` (default 10 * n^3 for n pieces).
Configuration uniformizeQueenBudgets(const Configuration& config,
                                     std::optional<long long> offsetBound = {});

// Compiles a colorful domination instance (k classes of n red vertices each,
// plus blue vertices) into an undirected capture graph with uniform budget 2:
// the source bipartite graph, plus per red vertex a partner hub carrying two
// spike arms of length two, per class a guard adjacent to the partners of
// that class, a hub vertex adjacent to all partners, and a two-vertex tail
// hanging off the hub. Vertex ids in order: reds (red i -> i-1), blues
// (blue l -> kn+l-1), partners, then the four spike vertices of each red,
// then the k guards, then hub, then the two tail vertices; the graph has
// 6kn + |B| + k + 3 vertices in total. The graph is solvable exactly when
// some selection of one red per class dominates every blue vertex. When a
// valid `selection` is supplied, a clearing sequence onto the hub is embedded
// (a capture plan along the spanning tree the selection induces). Throws
// MalformedInstance on an invalid instance and InvalidDominatingSet on an
// invalid selection.
ReductionOutput colorfulRbdsToGraph(const ColorfulRBDSInstance& inst,
                                    const std::optional<std::vector<int>>& selection = {});

// Compiles a CNF formula (m clauses, n variables) into a directed acyclic
// capture instance with uniform budget 2: one vertex per clause with an edge
// to the occurrence vertex of each of its literals; per variable a true
// vertex and a false vertex, both feeding that variable's merge vertex; and
// every merge vertex feeding one shared sink. Vertex ids: clause i -> i-1;
// variable j -> true m+3(j-1), false m+3(j-1)+1, merge m+3(j-1)+2; sink
// m+3n. The instance is solvable exactly when the formula is satisfiable.
// When a satisfying `assignment` is supplied, the three-phase clearing onto
// the sink is embedded: each clause token captures the occurrence vertex of
// its satisfied literal with the least variable index, then per variable the
// assignment-side token and then the untouched opposite token fold into the
// merge vertex, and the merge tokens drain into the sink. Throws
// MalformedInstance on an invalid formula or a non-satisfying assignment.
ReductionOutput threeSatToDag(const CnfFormula& phi,
                              const std::optional<std::vector<bool>>& assignment = {});

}  // namespace solo
