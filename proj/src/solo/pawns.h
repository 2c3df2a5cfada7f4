#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solo/board.h"

namespace solo {

// A set of white-pawn squares, all with two captures left. A pawn on (x, y)
// may capture on (x-1, y+1) and (x+1, y+1); the square holding the unique
// highest pawn is the only possible final square ("target"). Mixed square
// colours or a tied highest row are legal positions that can never be won,
// so deciders report them as unsolvable rather than rejecting them.
struct PawnForest {
    std::vector<Square> squares;

    // Throws BudgetNotTwo unless every piece is a white pawn of budget 2
    // (MalformedInstance for non-pawn pieces).
    static PawnForest fromConfiguration(const Configuration& config);
    Configuration toConfiguration() const;

    bool contains(const Square& s) const;
    // Squares capturable by a pawn on v, i.e. v's parents in the capture order.
    std::vector<Square> parentsOf(const Square& v) const;
    // Squares whose pawns can capture on v.
    std::vector<Square> childrenOf(const Square& v) const;
    // The unique square of maximum row, if it is unique.
    std::optional<Square> uniqueTop() const;
    // True if all squares share one chessboard colour ((x + y) parity).
    bool sameColor() const;
};

struct PawnDecision {
    bool solvable = false;
    // Why the instance is a structural no (empty otherwise).
    std::string reason;
};

// Skewed-binary-tree shape test: same colour; every other square strictly
// below the top and with a parent present; every non-empty row below the top
// holds exactly two squares with a common parent, except possibly the
// bottom-most row which may hold one.
bool isSkewedBinaryTree(const PawnForest& forest);

// Can the forest be cleared with the final capturing pawn keeping at least
// one move? Equivalent to the skewed-binary-tree shape test.
bool decidePawnsSuperSolvable(const PawnForest& forest);

// Full solvability decision by case analysis on the top square's children;
// each case reduces to a super-solvability test on a trimmed square set.
PawnDecision decidePawns(const PawnForest& forest);

// Constructive clearing for a super-solvable forest, sweeping rows bottom-up;
// ends on the top square with one capture left. Throws NotSolvable if the
// forest is not a skewed binary tree.
CaptureSequence witnessPawnsSuperSolvable(const PawnForest& forest);

// Constructive clearing for any decidePawns-positive forest; ends on the top
// square. Throws NotSolvable when decidePawns rejects.
CaptureSequence witnessPawns(const PawnForest& forest);

}  // namespace solo
