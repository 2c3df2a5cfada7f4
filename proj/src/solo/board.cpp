#include "solo/board.h"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace solo {

char kindLetter(PieceKind kind) {
    switch (kind) {
        case PieceKind::Rook: return 'R';
        case PieceKind::Queen: return 'Q';
        case PieceKind::Bishop: return 'B';
        case PieceKind::Knight: return 'N';
        case PieceKind::PawnWhite: return 'P';
    }
    return '?';
}

std::optional<PieceKind> kindFromLetter(char letter) {
    switch (letter) {
        case 'R': return PieceKind::Rook;
        case 'Q': return PieceKind::Queen;
        case 'B': return PieceKind::Bishop;
        case 'N': return PieceKind::Knight;
        case 'P': return PieceKind::PawnWhite;
    }
    return std::nullopt;
}

std::string to_string(const Square& s) {
    return std::to_string(s.x) + "," + std::to_string(s.y);
}

std::string to_string(const CaptureMove& m) {
    return to_string(m.from) + " -> " + to_string(m.to);
}

std::optional<std::size_t> Configuration::pieceAt(const Square& sq) const {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].square == sq) return i;
    }
    return std::nullopt;
}

Configuration Configuration::normalized() const {
    Configuration out = *this;
    std::sort(out.pieces.begin(), out.pieces.end(),
              [](const PlacedPiece& a, const PlacedPiece& b) { return a.square < b.square; });
    return out;
}

void Configuration::validate() const {
    std::set<std::pair<int, int>> seen;
    for (const PlacedPiece& p : pieces) {
        if (p.square.x < 1 || p.square.y < 1) {
            throw MalformedInstance("square " + to_string(p.square) + " is off the board");
        }
        if (p.budget < 0 || p.budget > maxBudget) {
            throw MalformedInstance("budget " + std::to_string(p.budget) + " at " +
                                    to_string(p.square) + " outside [0, " +
                                    std::to_string(maxBudget) + "]");
        }
        if (!seen.insert({p.square.x, p.square.y}).second) {
            throw MalformedInstance("two pieces on square " + to_string(p.square));
        }
    }
}

bool attacksGeometrically(PieceKind kind, const Square& from, const Square& to) {
    if (from == to) return false;
    const int dx = to.x - from.x;
    const int dy = to.y - from.y;
    switch (kind) {
        case PieceKind::Rook:
            return dx == 0 || dy == 0;
        case PieceKind::Bishop:
            return std::abs(dx) == std::abs(dy);
        case PieceKind::Queen:
            return dx == 0 || dy == 0 || std::abs(dx) == std::abs(dy);
        case PieceKind::Knight:
            return (std::abs(dx) == 1 && std::abs(dy) == 2) ||
                   (std::abs(dx) == 2 && std::abs(dy) == 1);
        case PieceKind::PawnWhite:
            return std::abs(dx) == 1 && dy == 1;
    }
    return false;
}

namespace {

// True if some piece sits strictly between `from` and `to` on their common
// line. Callers guarantee the two squares share a rank, file, or diagonal.
bool lineBlocked(const Configuration& config, const Square& from, const Square& to) {
    const int dx = (to.x > from.x) - (to.x < from.x);
    const int dy = (to.y > from.y) - (to.y < from.y);
    Square cur{from.x + dx, from.y + dy};
    while (!(cur == to)) {
        if (config.pieceAt(cur)) return true;
        cur.x += dx;
        cur.y += dy;
    }
    return false;
}

}  // namespace

bool attacks(const Configuration& config, const Square& from, const Square& to) {
    auto idx = config.pieceAt(from);
    if (!idx) return false;
    const PieceKind kind = config.pieces[*idx].kind;
    if (!attacksGeometrically(kind, from, to)) return false;
    if (kind == PieceKind::Knight || kind == PieceKind::PawnWhite) return true;
    return !lineBlocked(config, from, to);
}

std::vector<CaptureMove> legalCaptures(const Configuration& config) {
    std::vector<CaptureMove> out;
    for (const PlacedPiece& attacker : config.pieces) {
        if (attacker.budget < 1) continue;
        for (const PlacedPiece& victim : config.pieces) {
            if (victim.square == attacker.square) continue;
            if (attacks(config, attacker.square, victim.square)) {
                out.push_back({attacker.square, victim.square});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Configuration applyCapture(const Configuration& config, const CaptureMove& move) {
    auto attackerIdx = config.pieceAt(move.from);
    if (!attackerIdx) {
        throw IllegalMove(IllegalMove::Reason::EmptyFrom,
                          "no piece on " + to_string(move.from));
    }
    auto victimIdx = config.pieceAt(move.to);
    if (!victimIdx) {
        throw IllegalMove(IllegalMove::Reason::EmptyTo,
                          "no piece to capture on " + to_string(move.to));
    }
    const PlacedPiece& attacker = config.pieces[*attackerIdx];
    if (attacker.budget < 1) {
        throw IllegalMove(IllegalMove::Reason::ZeroBudget,
                          "piece on " + to_string(move.from) + " has no captures left");
    }
    if (!attacksGeometrically(attacker.kind, move.from, move.to)) {
        throw IllegalMove(IllegalMove::Reason::Geometry,
                          std::string(1, kindLetter(attacker.kind)) + " on " +
                              to_string(move.from) + " cannot reach " + to_string(move.to));
    }
    if (attacker.kind != PieceKind::Knight && attacker.kind != PieceKind::PawnWhite &&
        lineBlocked(config, move.from, move.to)) {
        throw IllegalMove(IllegalMove::Reason::BlockedLine,
                          "line from " + to_string(move.from) + " to " + to_string(move.to) +
                              " is blocked");
    }
    Configuration next = config;
    PlacedPiece moved = attacker;
    moved.square = move.to;
    moved.budget -= 1;
    next.pieces[*victimIdx] = moved;
    next.pieces.erase(next.pieces.begin() + static_cast<std::ptrdiff_t>(*attackerIdx));
    return next;
}

VerificationReport verifySequence(const Configuration& config, const CaptureSequence& seq) {
    VerificationReport report;
    Configuration cur = config;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            cur = applyCapture(cur, seq[i]);
        } catch (const IllegalMove& e) {
            report.success = false;
            report.failedIndex = i;
            report.reason = e.what();
            report.remainingPieces = cur.pieces.size();
            return report;
        }
    }
    report.remainingPieces = cur.pieces.size();
    if (cur.pieces.size() == 1) {
        report.success = true;
        report.finalSquare = cur.pieces[0].square;
        report.finalBudget = cur.pieces[0].budget;
    } else {
        report.success = false;
        report.reason = std::to_string(cur.pieces.size()) + " pieces remain after the sequence";
    }
    return report;
}

Configuration rotateBishopsToRooks(const Configuration& config) {
    for (const PlacedPiece& p : config.pieces) {
        if (p.kind != PieceKind::Bishop) {
            throw NonBishopPiece("piece " + std::string(1, kindLetter(p.kind)) + " on " +
                                 to_string(p.square) + " is not a bishop");
        }
    }
    int maxDiff = 0;
    for (const PlacedPiece& p : config.pieces) {
        maxDiff = std::max(maxDiff, p.square.x - p.square.y);
    }
    const int offset = maxDiff + 1;
    Configuration out;
    out.maxBudget = config.maxBudget;
    for (const PlacedPiece& p : config.pieces) {
        PlacedPiece r = p;
        r.kind = PieceKind::Rook;
        r.square = Square{p.square.x + p.square.y, p.square.y - p.square.x + offset};
        out.pieces.push_back(r);
    }
    return out.normalized();
}

}  // namespace solo
