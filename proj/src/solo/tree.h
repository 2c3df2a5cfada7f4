#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "solo/graph.h"

namespace solo {

// A tree on vertices 0..V-1 with a distinguished root, used for the
// budget-2 capture game. "level 0" solvability means the tokens can be
// cleared to a single token on the root; "level 1" additionally requires
// that final token to keep one capture in hand.
struct RootedTree {
    int vertexCount = 0;
    std::vector<std::pair<int, int>> edges;
    int root = 0;

    // Connected, acyclic, |edges| = |vertices| - 1, root in range.
    // Throws MalformedInstance on violation.
    void validate() const;

    // children[v] = v's children when the tree is oriented away from the
    // root, each list sorted ascending.
    std::vector<std::vector<int>> childrenByParent() const;

    // The same tree as an undirected capture instance with uniform budgets.
    CaptureGraph toCaptureGraph(int budget = 2) const;
};

// Decides 0/1-solvability of the rooted tree with all budgets 2, by the
// subtree recursion:
//   level 1: |T| = 1, or the root has a leaf child and every child subtree
//            is level-1 solvable;
//   level 0: every child subtree is level-1 solvable.
// An equivalent structural form — level 0: every internal vertex other than
// the root has a leaf child; level 1: |T| = 1 or every internal vertex has a
// leaf child — is computed as well, and the two are asserted to agree.
bool treeSolvable(const RootedTree& t, int level);

// Constructive clearing onto the root for a level-0 solvable tree, built by
// postorder recursion: each subtree gathers onto its own root with a capture
// to spare (its smallest leaf child is reserved to capture last), then the
// gathered tokens take the parent in turn. Throws NotSolvable when the tree
// is not level-0 solvable.
GraphCaptureSequence witnessTreeCapture(const RootedTree& t);

struct CharacterizationResult {
    bool solvable = false;
    // The first rooted spanning tree found whose every internal vertex other
    // than the root has a leaf child (when solvable).
    std::optional<RootedTree> witnessTree;
    std::uint64_t treesEnumerated = 0;
};

// Reference decider for connected undirected budget-2 instances: enumerates
// rooted spanning trees and looks for one certifying solvability. Exponential
// by design (finding such a tree is NP-hard in general); use only on small
// instances. Throws SearchBudgetExceeded past `treeCap` enumerated trees.
CharacterizationResult decideUndirectedByCharacterization(const CaptureGraph& g,
                                                          std::uint64_t treeCap = 1'000'000);

}  // namespace solo
