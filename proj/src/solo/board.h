#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solo/errors.h"

namespace solo {

enum class PieceKind : std::uint8_t { Rook, Queen, Bishop, Knight, PawnWhite };

char kindLetter(PieceKind kind);
std::optional<PieceKind> kindFromLetter(char letter);

// Board square with 1-based coordinates: x = column, y = row.
// Ordering is lexicographic on (y, x); this is the canonical order used for
// move generation, witnesses, and serialized output.
struct Square {
    int x = 1;
    int y = 1;

    friend constexpr bool operator==(const Square&, const Square&) = default;
    friend constexpr std::strong_ordering operator<=>(const Square& a, const Square& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

std::string to_string(const Square& s);

struct PlacedPiece {
    PieceKind kind = PieceKind::Rook;
    Square square;
    int budget = 0;

    friend constexpr bool operator==(const PlacedPiece&, const PlacedPiece&) = default;
};

// A full game state: a set of pieces (distinct squares) plus the declared
// maximum budget d.
struct Configuration {
    std::vector<PlacedPiece> pieces;
    int maxBudget = 2;

    // Index of the piece on `sq`, if any.
    std::optional<std::size_t> pieceAt(const Square& sq) const;
    // Pieces sorted by square in canonical (y, x) order.
    Configuration normalized() const;
    // Checks the structural invariants: distinct squares, coordinates >= 1,
    // budgets within [0, maxBudget]. Throws MalformedInstance on violation.
    void validate() const;
};

struct CaptureMove {
    Square from;
    Square to;

    friend constexpr bool operator==(const CaptureMove&, const CaptureMove&) = default;
    friend constexpr std::strong_ordering operator<=>(const CaptureMove& a, const CaptureMove& b) {
        if (auto c = a.from <=> b.from; c != 0) return c;
        return a.to <=> b.to;
    }
};

using CaptureSequence = std::vector<CaptureMove>;

std::string to_string(const CaptureMove& m);

// True if the piece at `from` attacks `to` by pure piece geometry, ignoring
// any pieces in between (knights and pawns have no "in between").
bool attacksGeometrically(PieceKind kind, const Square& from, const Square& to);

// True if the piece at `from` attacks the square `to` under standard chess
// rules: sliding pieces are blocked by any piece strictly between.
bool attacks(const Configuration& config, const Square& from, const Square& to);

// Every legal capture (attacker budget >= 1, attacks victim square), sorted
// by (from, to) in canonical square order.
std::vector<CaptureMove> legalCaptures(const Configuration& config);

// Applies one capture, returning the successor configuration. The attacker
// relocates to `move.to` with its budget reduced by one; the victim is
// removed. Throws IllegalMove if the move is not legal, with a reason
// distinguishing emptiness, zero budget, a blocked line, and bad geometry.
Configuration applyCapture(const Configuration& config, const CaptureMove& move);

struct VerificationReport {
    bool success = false;
    // Index of the first offending move when success is false and a move was
    // at fault (absent when the failure is "pieces left over").
    std::optional<std::size_t> failedIndex;
    std::string reason;
    // Piece count after replaying the longest legal prefix.
    std::size_t remainingPieces = 0;
    // Where the final piece ended (present when exactly one piece remains).
    std::optional<Square> finalSquare;
    // Budget of the final piece (present when exactly one piece remains).
    std::optional<int> finalBudget;
};

// Replays `seq` from `config`; succeeds iff every move is legal and exactly
// one piece remains at the end. Illegal moves are reported, not thrown.
VerificationReport verifySequence(const Configuration& config, const CaptureSequence& seq);

// Maps an all-bishop configuration to the all-rook configuration obtained by
// the 45-degree change of coordinates (x, y) -> (x + y, y - x + offset); the
// offset is chosen so every new coordinate stays >= 1. Diagonal lines map to
// files/ranks with blocking preserved, so solvability is preserved exactly.
// Throws NonBishopPiece if any piece is not a bishop.
Configuration rotateBishopsToRooks(const Configuration& config);

}  // namespace solo
