#pragma once

#include <optional>

#include "solo/board.h"

namespace solo {

struct D1Decision {
    bool solvable = false;
    // A gathering square all other pieces can reach (present when solvable).
    std::optional<Square> target;
};

// Decision for configurations where every budget is at most one: solvable
// iff some occupied square z is reachable by every other piece along its
// pure attack geometry. Pieces between a slider and z share its line, so
// they reach z too and can be ordered to clear the line first; blocking is
// therefore resolved by ordering, not by the decision. Throws BudgetTooLarge
// if any budget exceeds one.
D1Decision decideD1(const Configuration& config);

// Constructive witness for a decideD1-positive configuration: repeatedly the
// first piece in canonical square order that can legally capture on z moves
// there. Throws NotSolvable if decideD1 rejects the configuration.
CaptureSequence witnessD1(const Configuration& config);

}  // namespace solo
