#include "solo/d1.h"

#include <algorithm>

namespace solo {

namespace {

void requireBudgetsAtMostOne(const Configuration& config) {
    for (const PlacedPiece& p : config.pieces) {
        if (p.budget > 1) {
            throw BudgetTooLarge("piece on " + to_string(p.square) + " has budget " +
                                 std::to_string(p.budget) + "; this decider needs budgets <= 1");
        }
    }
}

}  // namespace

D1Decision decideD1(const Configuration& config) {
    requireBudgetsAtMostOne(config);
    if (config.pieces.size() == 1) {
        return {true, config.pieces[0].square};
    }
    const Configuration sorted = config.normalized();
    for (const PlacedPiece& candidate : sorted.pieces) {
        bool allReach = true;
        for (const PlacedPiece& p : sorted.pieces) {
            if (p.square == candidate.square) continue;
            if (p.budget < 1 || !attacksGeometrically(p.kind, p.square, candidate.square)) {
                allReach = false;
                break;
            }
        }
        if (allReach) return {true, candidate.square};
    }
    return {false, std::nullopt};
}

CaptureSequence witnessD1(const Configuration& config) {
    const D1Decision decision = decideD1(config);
    if (!decision.solvable) {
        throw NotSolvable("no square is reachable by every other piece");
    }
    const Square z = *decision.target;
    Configuration cur = config.normalized();
    CaptureSequence out;
    while (cur.pieces.size() > 1) {
        bool moved = false;
        for (const PlacedPiece& p : cur.pieces) {
            if (p.square == z || p.budget < 1) continue;
            if (attacks(cur, p.square, z)) {
                out.push_back({p.square, z});
                cur = applyCapture(cur, {p.square, z}).normalized();
                moved = true;
                break;
            }
        }
        if (!moved) {
            throw NotSolvable("gathering on " + to_string(z) + " stalled");
        }
    }
    return out;
}

}  // namespace solo
