#include "solo/rooks1d.h"

#include <algorithm>
#include <map>

namespace solo {

RookString RookString::fromText(const std::string& text, std::optional<int> maxBudget) {
    RookString out;
    int maxDigit = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            out.cells.push_back(-1);
        } else if (c >= '0' && c <= '9') {
            out.cells.push_back(c - '0');
            maxDigit = std::max(maxDigit, c - '0');
        } else {
            throw ParseError(1, static_cast<int>(i) + 1,
                             std::string("expected digit or '.', got '") + c + "'");
        }
    }
    if (out.cells.empty()) {
        throw ParseError(1, 1, "empty rook string");
    }
    out.maxBudget = maxBudget ? *maxBudget : std::max(2, maxDigit);
    if (maxDigit > out.maxBudget) {
        throw ParseError(1, 1, "cell budget " + std::to_string(maxDigit) +
                                   " exceeds declared maximum " + std::to_string(out.maxBudget));
    }
    return out;
}

std::string RookString::text() const {
    std::string out;
    for (int v : cells) {
        out += v < 0 ? '.' : static_cast<char>('0' + v);
    }
    return out;
}

Configuration RookString::toConfiguration() const {
    Configuration out;
    out.maxBudget = maxBudget;
    for (int i = 1; i <= size(); ++i) {
        if (occupied(i)) {
            out.pieces.push_back({PieceKind::Rook, cellSquare(i), value(i)});
        }
    }
    return out;
}

Rooks1DDecision decideRooks1D(const RookString& s) {
    const int n = s.size();
    // prefixZeros[i] / prefixSurplus[i]: totals over cells 1..i.
    std::vector<int> prefixZeros(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> prefixSurplus(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = s.cells[static_cast<std::size_t>(i - 1)];
        prefixZeros[static_cast<std::size_t>(i)] =
            prefixZeros[static_cast<std::size_t>(i - 1)] + (v == 0 ? 1 : 0);
        prefixSurplus[static_cast<std::size_t>(i)] =
            prefixSurplus[static_cast<std::size_t>(i - 1)] + (v >= 1 ? v - 1 : 0);
    }
    for (int l = 1; l <= n; ++l) {
        if (!s.occupied(l)) continue;
        const int leftZeros = prefixZeros[static_cast<std::size_t>(l - 1)];
        const int leftSurplus = prefixSurplus[static_cast<std::size_t>(l - 1)];
        const int rightZeros = prefixZeros[static_cast<std::size_t>(n)] -
                               prefixZeros[static_cast<std::size_t>(l)];
        const int rightSurplus = prefixSurplus[static_cast<std::size_t>(n)] -
                                 prefixSurplus[static_cast<std::size_t>(l)];
        if (leftSurplus >= leftZeros && rightSurplus >= rightZeros) {
            return {true, l};
        }
    }
    return {false, std::nullopt};
}

Rooks1DDecision decideRooks1D_d2(const RookString& s) {
    if (s.maxBudget != 2) {
        throw MaxBudgetMismatch("the two-budget criterion needs max budget 2, got " +
                                std::to_string(s.maxBudget));
    }
    const int n = s.size();
    std::vector<int> prefixZeros(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> prefixTwos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = s.cells[static_cast<std::size_t>(i - 1)];
        prefixZeros[static_cast<std::size_t>(i)] =
            prefixZeros[static_cast<std::size_t>(i - 1)] + (v == 0 ? 1 : 0);
        prefixTwos[static_cast<std::size_t>(i)] =
            prefixTwos[static_cast<std::size_t>(i - 1)] + (v == 2 ? 1 : 0);
    }
    for (int l = 1; l <= n; ++l) {
        if (!s.occupied(l)) continue;
        const bool leftOk = prefixTwos[static_cast<std::size_t>(l - 1)] >=
                            prefixZeros[static_cast<std::size_t>(l - 1)];
        const bool rightOk =
            prefixTwos[static_cast<std::size_t>(n)] - prefixTwos[static_cast<std::size_t>(l)] >=
            prefixZeros[static_cast<std::size_t>(n)] - prefixZeros[static_cast<std::size_t>(l)];
        if (leftOk && rightOk) {
            return {true, l};
        }
    }
    return {false, std::nullopt};
}

namespace {

// One side of the target cell, cleared independently. `vals` maps occupied
// cells to budgets and is shared with the caller so the final sweep lands
// the side's survivor chain onto l.
void clearSide(std::map<int, int>& vals, int lo, int hi, bool leftOfTarget, int l,
               std::vector<std::pair<int, int>>& moves) {
    auto occupiedIn = [&]() {
        std::vector<int> cells;
        for (const auto& [cell, v] : vals) {
            if (cell >= lo && cell <= hi) cells.push_back(cell);
        }
        return cells;
    };

    for (;;) {
        std::vector<int> cells = occupiedIn();
        bool progressed = false;
        // 1-rooks consume neighbouring 0-rooks, leftmost applicable pair first.
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            const int a = cells[i], b = cells[i + 1];
            const int va = vals[a], vb = vals[b];
            if (va == 1 && vb == 0) {
                moves.push_back({a, b});
                vals[b] = 0;
                vals.erase(a);
                progressed = true;
                break;
            }
            if (vb == 1 && va == 0) {
                moves.push_back({b, a});
                vals[a] = 0;
                vals.erase(b);
                progressed = true;
                break;
            }
        }
        if (progressed) continue;
        bool anyZero = false;
        for (int c : cells) {
            if (vals[c] == 0) {
                anyZero = true;
                break;
            }
        }
        if (!anyZero) break;
        // Stuck: a rook with two or more captures left absorbs the
        // leftmost neighbouring 0-rook.
        progressed = false;
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            const int a = cells[i], b = cells[i + 1];
            const int va = vals[a], vb = vals[b];
            if (va == 0 && vb >= 2) {
                moves.push_back({b, a});
                vals[a] = vb - 1;
                vals.erase(b);
                progressed = true;
                break;
            }
            if (vb == 0 && va >= 2) {
                moves.push_back({a, b});
                vals[b] = va - 1;
                vals.erase(a);
                progressed = true;
                break;
            }
        }
        if (!progressed) {
            throw NotSolvableAt("side clearing is stuck; the per-side criterion fails");
        }
    }

    // Sweep the remaining positive rooks onto l, nearest to l first.
    std::vector<int> rest = occupiedIn();
    if (leftOfTarget) std::reverse(rest.begin(), rest.end());
    for (int c : rest) {
        moves.push_back({c, l});
        vals[l] = vals[c] - 1;
        vals.erase(c);
    }
}

}  // namespace

CaptureSequence witnessRooks1D(const RookString& s, int l) {
    if (l < 1 || l > s.size() || !s.occupied(l)) {
        throw NotSolvableAt("cell " + std::to_string(l) + " does not hold a rook");
    }
    {
        // Check the per-side criterion at l before constructing.
        int leftZeros = 0, leftSurplus = 0, rightZeros = 0, rightSurplus = 0;
        for (int i = 1; i <= s.size(); ++i) {
            if (!s.occupied(i) || i == l) continue;
            const int v = s.value(i);
            if (i < l) {
                leftZeros += v == 0 ? 1 : 0;
                leftSurplus += v >= 1 ? v - 1 : 0;
            } else {
                rightZeros += v == 0 ? 1 : 0;
                rightSurplus += v >= 1 ? v - 1 : 0;
            }
        }
        if (leftSurplus < leftZeros || rightSurplus < rightZeros) {
            throw NotSolvableAt("the board does not clear onto cell " + std::to_string(l));
        }
    }

    std::map<int, int> vals;
    for (int i = 1; i <= s.size(); ++i) {
        if (s.occupied(i)) vals[i] = s.value(i);
    }
    std::vector<std::pair<int, int>> cellMoves;
    clearSide(vals, 1, l - 1, true, l, cellMoves);
    clearSide(vals, l + 1, s.size(), false, l, cellMoves);

    CaptureSequence out;
    out.reserve(cellMoves.size());
    for (const auto& [a, b] : cellMoves) {
        out.push_back({RookString::cellSquare(a), RookString::cellSquare(b)});
    }
    return out;
}

}  // namespace solo
