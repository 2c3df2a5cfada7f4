#include "solo/solver.h"

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "solo/flatset.h"

namespace solo {

namespace {

using detail::FlatSet128;
using detail::Key128;
using detail::mix64;

Key128 stateKey(const std::vector<PlacedPiece>& pieces) {
    Key128 k{0x9e3779b97f4a7c15ULL, 0x6a09e667f3bcc909ULL};
    for (const PlacedPiece& p : pieces) {
        const std::uint64_t packed = static_cast<std::uint64_t>(static_cast<int>(p.kind)) |
                                     (static_cast<std::uint64_t>(p.square.x) << 3) |
                                     (static_cast<std::uint64_t>(p.square.y) << 24) |
                                     (static_cast<std::uint64_t>(p.budget) << 48);
        k.lo = mix64(k.lo ^ packed);
        k.hi = mix64(k.hi ^ (packed * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    }
    if (k == Key128{}) k = Key128{1, 1};
    return k;
}

// The four sliding line families, keyed so squares on a common line share a key.
enum class Line { Row, Column, Diagonal, AntiDiagonal };

int lineKey(Line line, const Square& s) {
    switch (line) {
        case Line::Row: return s.y;
        case Line::Column: return s.x;
        case Line::Diagonal: return s.y - s.x;
        case Line::AntiDiagonal: return s.y + s.x;
    }
    return 0;
}

int linePos(Line line, const Square& s) {
    switch (line) {
        case Line::Row: return s.x;
        case Line::Column: return s.y;
        case Line::Diagonal: return s.x;
        case Line::AntiDiagonal: return s.x;
    }
    return 0;
}

bool kindUsesLine(PieceKind kind, Line line) {
    const bool straight = line == Line::Row || line == Line::Column;
    switch (kind) {
        case PieceKind::Rook: return straight;
        case PieceKind::Bishop: return !straight;
        case PieceKind::Queen: return true;
        default: return false;
    }
}

struct Searcher {
    const SolveOptions& opts;
    std::uint64_t states = 0;
    FlatSet128 failed;
    CaptureSequence path;
    std::optional<Square> finalSquare;

    // Static square-support adjacency: any kind present in the root
    // configuration attacking geometrically in either direction. Kinds can
    // move between squares but never appear from nowhere, so two squares
    // with no such edge can never interact; if this graph splits the
    // occupied squares into two or more components, each keeps a piece
    // forever and the position is dead.
    std::array<bool, 5> kindsPresent{};

    explicit Searcher(const SolveOptions& o) : opts(o) {}

    bool supportEdge(const Square& a, const Square& b) const {
        for (int k = 0; k < 5; ++k) {
            if (!kindsPresent[static_cast<std::size_t>(k)]) continue;
            const PieceKind kind = static_cast<PieceKind>(k);
            if (attacksGeometrically(kind, a, b) || attacksGeometrically(kind, b, a)) {
                return true;
            }
        }
        return false;
    }

    bool supportConnected(const std::vector<PlacedPiece>& pieces) const {
        const std::size_t n = pieces.size();
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (!seen[j] && supportEdge(pieces[cur].square, pieces[j].square)) {
                    seen[j] = true;
                    ++reached;
                    stack.push_back(j);
                }
            }
        }
        return reached == n;
    }

    // Same move set as legalCaptures, computed with per-line sorting so each
    // sliding attack resolves to nearest neighbours in O(n log n).
    std::vector<CaptureMove> movesOf(const std::vector<PlacedPiece>& pieces) const {
        std::vector<CaptureMove> out;
        const std::size_t n = pieces.size();

        auto pieceOn = [&](const Square& sq) -> const PlacedPiece* {
            // `pieces` is sorted by square in (y, x) order.
            auto it = std::lower_bound(pieces.begin(), pieces.end(), sq,
                                       [](const PlacedPiece& p, const Square& s) {
                                           return p.square < s;
                                       });
            if (it != pieces.end() && it->square == sq) return &*it;
            return nullptr;
        };

        for (Line line : {Line::Row, Line::Column, Line::Diagonal, Line::AntiDiagonal}) {
            // (lineKey, position, index) triples sorted so that pieces
            // adjacent on a common line become adjacent in the vector.
            std::vector<std::array<int, 3>> order;
            order.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                order.push_back({lineKey(line, pieces[i].square),
                                 linePos(line, pieces[i].square), static_cast<int>(i)});
            }
            std::sort(order.begin(), order.end());
            for (std::size_t idx = 0; idx + 1 < n; ++idx) {
                if (order[idx][0] != order[idx + 1][0]) continue;
                const PlacedPiece& a = pieces[static_cast<std::size_t>(order[idx][2])];
                const PlacedPiece& b = pieces[static_cast<std::size_t>(order[idx + 1][2])];
                if (a.budget >= 1 && kindUsesLine(a.kind, line)) {
                    out.push_back({a.square, b.square});
                }
                if (b.budget >= 1 && kindUsesLine(b.kind, line)) {
                    out.push_back({b.square, a.square});
                }
            }
        }

        static constexpr std::array<std::array<int, 2>, 8> knightOffsets = {
            {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}}};
        for (const PlacedPiece& p : pieces) {
            if (p.budget < 1) continue;
            if (p.kind == PieceKind::Knight) {
                for (const auto& off : knightOffsets) {
                    const Square to{p.square.x + off[0], p.square.y + off[1]};
                    if (pieceOn(to)) out.push_back({p.square, to});
                }
            } else if (p.kind == PieceKind::PawnWhite) {
                for (int dx : {-1, 1}) {
                    const Square to{p.square.x + dx, p.square.y + 1};
                    if (pieceOn(to)) out.push_back({p.square, to});
                }
            }
        }

        std::sort(out.begin(), out.end());
        return out;
    }

    bool rec(std::vector<PlacedPiece>& pieces) {
        if (pieces.size() == 1) {
            const PlacedPiece& last = pieces[0];
            if (opts.target && !(last.square == *opts.target)) return false;
            if (last.budget < opts.requireLeftoverBudget) return false;
            finalSquare = last.square;
            return true;
        }

        int budgetSum = 0;
        for (const PlacedPiece& p : pieces) budgetSum += p.budget;
        if (budgetSum < static_cast<int>(pieces.size()) - 1 + opts.requireLeftoverBudget) {
            return false;
        }
        if (opts.target) {
            // Captures land only on occupied squares, so an empty square can
            // never be reoccupied.
            bool occupied = false;
            for (const PlacedPiece& p : pieces) {
                if (p.square == *opts.target) {
                    occupied = true;
                    break;
                }
            }
            if (!occupied) return false;
        }
        if (!supportConnected(pieces)) return false;

        Key128 key;
        if (opts.memoize) {
            key = stateKey(pieces);
            if (failed.contains(key)) return false;
        }
        if (++states > opts.stateCap) throw SearchBudgetExceeded(states);

        for (const CaptureMove& move : movesOf(pieces)) {
            std::vector<PlacedPiece> next = pieces;
            std::size_t attackerIdx = 0, victimIdx = 0;
            for (std::size_t i = 0; i < next.size(); ++i) {
                if (next[i].square == move.from) attackerIdx = i;
                if (next[i].square == move.to) victimIdx = i;
            }
            PlacedPiece moved = next[attackerIdx];
            moved.square = move.to;
            moved.budget -= 1;
            next[victimIdx] = moved;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(attackerIdx));
            path.push_back(move);
            if (rec(next)) return true;
            path.pop_back();
        }

        if (opts.memoize) failed.insert(key);
        return false;
    }
};

}  // namespace

SolveResult solveExact(const Configuration& config, const SolveOptions& options) {
    config.validate();
    if (config.pieces.empty()) {
        throw MalformedInstance("cannot solve an empty configuration");
    }
    Searcher searcher(options);
    for (const PlacedPiece& p : config.pieces) {
        searcher.kindsPresent[static_cast<std::size_t>(p.kind)] = true;
    }
    std::vector<PlacedPiece> pieces = config.normalized().pieces;
    SolveResult result;
    result.solvable = searcher.rec(pieces);
    result.statesExplored = searcher.states;
    if (result.solvable) {
        result.witness = searcher.path;
        result.targetSquare = searcher.finalSquare;
    }
    return result;
}

std::map<Square, bool> solveAllTargets(const Configuration& config, const SolveOptions& options) {
    std::map<Square, bool> out;
    for (const PlacedPiece& p : config.pieces) {
        SolveOptions perTarget = options;
        perTarget.target = p.square;
        out[p.square] = solveExact(config, perTarget).solvable;
    }
    return out;
}

}  // namespace solo
