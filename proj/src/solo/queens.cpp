#include <limits>
#include <string>
#include <vector>

#include "solo/reduction.h"

namespace solo {

Configuration rooksToQueens(const Configuration& config, std::optional<int> spacing) {
    config.validate();
    for (const PlacedPiece& p : config.pieces) {
        if (p.kind != PieceKind::Rook)
            throw MalformedInstance("rooksToQueens requires an all-rook board");
    }
    const long long n = static_cast<long long>(config.pieces.size());
    const long long gap = spacing ? *spacing : n * n;
    if (gap < 0) throw MalformedInstance("spacing must be nonnegative");

    Configuration out;
    out.maxBudget = config.maxBudget;
    for (const PlacedPiece& p : config.pieces) {
        const long long nx = static_cast<long long>(p.square.x) * (gap + 1);
        if (nx > std::numeric_limits<int>::max())
            throw PlacementOverflow("stretched x coordinate exceeds the coordinate range");
        out.pieces.push_back({PieceKind::Queen, Square{static_cast<int>(nx), p.square.y}, p.budget});
    }
    return out.normalized();
}

namespace {

// Would a queen on `cand` (currently empty) attack `partner` and no other
// piece, with blocking taken into account?
bool attacksExactlyPartner(const Configuration& board, const Square& cand, const Square& partner) {
    Configuration probe = board;
    probe.pieces.push_back({PieceKind::Queen, cand, 2});
    bool partnerHit = false;
    int attacked = 0;
    for (const PlacedPiece& p : board.pieces) {
        if (attacks(probe, cand, p.square)) {
            ++attacked;
            if (p.square == partner) partnerHit = true;
        }
    }
    return partnerHit && attacked == 1;
}

}  // namespace

Configuration uniformizeQueenBudgets(const Configuration& config,
                                     std::optional<long long> offsetBound) {
    config.validate();
    for (const PlacedPiece& p : config.pieces) {
        if (p.kind != PieceKind::Queen)
            throw MalformedInstance("uniformizeQueenBudgets requires an all-queen board");
        if (p.budget != 1 && p.budget != 2)
            throw MalformedInstance("uniformizeQueenBudgets requires budgets 1 and 2 only");
    }
    const long long n = static_cast<long long>(config.pieces.size());
    const long long bound = offsetBound ? *offsetBound : 10 * n * n * n;

    Configuration out = config.normalized();
    std::vector<Square> partners;
    for (const PlacedPiece& p : out.pieces) {
        if (p.budget == 1) partners.push_back(p.square);
    }
    for (const Square& sq : partners) {
        out.pieces[*out.pieceAt(sq)].budget = 2;
        bool placed = false;
        for (long long t = 1; t <= bound && sq.x - t >= 1; ++t) {
            const Square cand{static_cast<int>(sq.x - t), static_cast<int>(sq.y + t)};
            if (out.pieceAt(cand)) continue;
            if (attacksExactlyPartner(out, cand, sq)) {
                out.pieces.push_back({PieceKind::Queen, cand, 2});
                placed = true;
                break;
            }
        }
        if (!placed)
            throw PlacementOverflow("no attack-free support offset for the piece on " + to_string(sq));
    }
    return out.normalized();
}

}  // namespace solo
