#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "solo/board.h"

namespace solo {

struct SolveOptions {
    // Require the final piece to stand on this square.
    std::optional<Square> target;
    // Require the final piece to have at least this many captures left.
    int requireLeftoverBudget = 0;
    // Abort with SearchBudgetExceeded after visiting this many states.
    std::uint64_t stateCap = 10'000'000;
    // Disable the transposition memo (kept for equivalence testing).
    bool memoize = true;
};

struct SolveResult {
    bool solvable = false;
    std::optional<CaptureSequence> witness;
    std::uint64_t statesExplored = 0;
    // Where the final piece ended (present iff solvable).
    std::optional<Square> targetSquare;
};

// Exhaustive depth-first search over capture sequences with a transposition
// memo on canonical states. Deterministic: the witness is the
// lexicographically first solving sequence under the canonical move order.
// Throws SearchBudgetExceeded when the state cap is passed; an overflow is
// never reported as "unsolvable".
SolveResult solveExact(const Configuration& config, const SolveOptions& options = {});

// For every initially occupied square z: can the board be cleared with the
// final piece on z? Agrees with solveExact(config, target = z) by construction.
std::map<Square, bool> solveAllTargets(const Configuration& config,
                                       const SolveOptions& options = {});

}  // namespace solo
