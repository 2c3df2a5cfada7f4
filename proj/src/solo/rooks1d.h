#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solo/board.h"

namespace solo {

// A one-dimensional rook configuration: cell i (1-based) holds a rook with
// the given remaining budget, or is empty. Serialized as a string of digits
// and '.' (e.g. "0212112100"); cell i corresponds to board square (1, i).
struct RookString {
    // -1 for an empty cell, otherwise the rook's budget (0..maxBudget).
    std::vector<int> cells;
    int maxBudget = 2;

    static RookString fromText(const std::string& text, std::optional<int> maxBudget = {});
    std::string text() const;
    Configuration toConfiguration() const;
    // Board square for 1-based cell index i.
    static Square cellSquare(int i) { return Square{1, i}; }

    int size() const { return static_cast<int>(cells.size()); }
    bool occupied(int i) const { return cells[static_cast<std::size_t>(i - 1)] >= 0; }
    int value(int i) const { return cells[static_cast<std::size_t>(i - 1)]; }
};

struct Rooks1DDecision {
    bool solvable = false;
    // Smallest qualifying final cell (1-based) when solvable.
    std::optional<int> cell;
};

// O(N) decision for any max budget: the board clears onto cell l iff cell l
// is occupied and, independently on each side of l, the total surplus
// sum(v - 1) over occupied cells with v >= 1 covers the number of 0-cells.
Rooks1DDecision decideRooks1D(const RookString& s);

// The max-budget-2 specialization: per side, at least as many 2s as 0s.
// Requires maxBudget == 2 (throws MaxBudgetMismatch otherwise) and agrees
// with decideRooks1D everywhere.
Rooks1DDecision decideRooks1D_d2(const RookString& s);

// Constructive clearing sequence onto cell l, following the inductive
// strategy: on each side of l, 1-rooks repeatedly consume 0-rooks
// (leftmost applicable pair first); when stuck, the leftmost
// (0, x>=2)-or-(x>=2, 0) neighbour pair resolves it; finally the survivors
// sweep onto l nearest-first. Throws NotSolvableAt if the criterion fails
// at l. The result passes verifySequence and ends on square (1, l).
CaptureSequence witnessRooks1D(const RookString& s, int l);

}  // namespace solo
