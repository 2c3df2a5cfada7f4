#include "solo/pawns.h"

#include <algorithm>
#include <map>
#include <set>

#include "solo/errors.h"

namespace solo {

namespace {

bool inSet(const std::vector<Square>& sorted, const Square& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
}

Square topSquare(const std::vector<Square>& squares) {
    // (y, x)-max; with a unique highest row this is the top square.
    return *std::max_element(squares.begin(), squares.end());
}

std::vector<Square> without(const std::vector<Square>& squares,
                            const std::vector<Square>& removed) {
    std::vector<Square> out;
    out.reserve(squares.size());
    for (const Square& s : squares)
        if (std::find(removed.begin(), removed.end(), s) == removed.end()) out.push_back(s);
    return out;
}

std::optional<Square> uniqueTopOf(const std::vector<Square>& squares) {
    if (squares.empty()) return std::nullopt;
    int maxRow = 0;
    for (const Square& s : squares) maxRow = std::max(maxRow, s.y);
    std::optional<Square> top;
    for (const Square& s : squares) {
        if (s.y != maxRow) continue;
        if (top) return std::nullopt;
        top = s;
    }
    return top;
}

PawnForest forestOf(std::vector<Square> squares) {
    std::sort(squares.begin(), squares.end());
    return PawnForest{std::move(squares)};
}

}  // namespace

PawnForest PawnForest::fromConfiguration(const Configuration& config) {
    config.validate();
    PawnForest forest;
    forest.squares.reserve(config.pieces.size());
    for (const PlacedPiece& p : config.pieces) {
        if (p.kind != PieceKind::PawnWhite)
            throw MalformedInstance("pawn decider requires white pawns only, found '" +
                                    std::string(1, kindLetter(p.kind)) + "' at " +
                                    to_string(p.square));
        if (p.budget != 2)
            throw BudgetNotTwo("pawn at " + to_string(p.square) + " has budget " +
                               std::to_string(p.budget) + ", expected 2");
        forest.squares.push_back(p.square);
    }
    std::sort(forest.squares.begin(), forest.squares.end());
    return forest;
}

Configuration PawnForest::toConfiguration() const {
    Configuration config;
    config.maxBudget = 2;
    config.pieces.reserve(squares.size());
    for (const Square& s : squares)
        config.pieces.push_back({PieceKind::PawnWhite, s, 2});
    return config.normalized();
}

bool PawnForest::contains(const Square& s) const { return inSet(squares, s); }

std::vector<Square> PawnForest::parentsOf(const Square& v) const {
    std::vector<Square> out;
    for (int dx : {-1, +1}) {
        Square p{v.x + dx, v.y + 1};
        if (contains(p)) out.push_back(p);
    }
    return out;
}

std::vector<Square> PawnForest::childrenOf(const Square& v) const {
    std::vector<Square> out;
    for (int dx : {-1, +1}) {
        Square c{v.x + dx, v.y - 1};
        if (contains(c)) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Square> PawnForest::uniqueTop() const { return uniqueTopOf(squares); }

bool PawnForest::sameColor() const {
    for (const Square& s : squares)
        if (((s.x + s.y) & 1) != ((squares.front().x + squares.front().y) & 1)) return false;
    return true;
}

bool isSkewedBinaryTree(const PawnForest& forest) {
    const auto& V = forest.squares;
    if (V.empty()) return false;
    if (!forest.sameColor()) return false;
    const Square root = topSquare(V);

    std::map<int, std::vector<Square>> rows;  // non-root squares grouped by row
    for (const Square& s : V) {
        if (s == root) continue;
        if (s.y >= root.y) return false;        // tied or higher than the root
        if (forest.parentsOf(s).empty()) return false;
        rows[s.y].push_back(s);
    }
    if (rows.empty()) return true;  // single square

    const int bottomRow = rows.begin()->first;
    for (const auto& [row, group] : rows) {
        if (group.size() == 1) {
            if (row != bottomRow) return false;  // singles only at the very bottom
        } else if (group.size() == 2) {
            const Square& a = group[0];
            const Square& b = group[1];
            if (b.x - a.x != 2) return false;                    // must be siblings
            if (!forest.contains({a.x + 1, row + 1})) return false;  // common parent
        } else {
            return false;
        }
    }
    return true;
}

bool decidePawnsSuperSolvable(const PawnForest& forest) {
    return isSkewedBinaryTree(forest);
}

namespace {

// The case analysis behind decidePawns. When `plan` is non-null, records the
// trimmed square set to super-solve plus the tail captures appended after it,
// so the witness construction cannot drift from the decision logic.
struct CasePlan {
    std::vector<Square> trimmed;  // super-solve these first (survivor on its top)
    CaptureSequence tail;         // then play these
};

PawnDecision decideWithPlan(const PawnForest& forest, CasePlan* plan) {
    const auto& V = forest.squares;
    if (V.empty()) return {false, "no pawns"};
    if (V.size() == 1) {
        if (plan) *plan = {V, {}};
        return {true, ""};
    }
    if (!forest.sameColor())
        return {false, "pawns sit on both square colours, so they can never interact"};
    auto topOpt = forest.uniqueTop();
    if (!topOpt)
        return {false, "highest row holds more than one pawn, but captures only move upward"};
    const Square t = *topOpt;
    const std::vector<Square> C = forest.childrenOf(t);
    if (C.empty())
        return {false, "no pawn can ever capture on the top square"};

    auto superSolve = [&](const std::vector<Square>& trimmed, CaptureSequence tail) {
        if (!isSkewedBinaryTree(forestOf(trimmed))) return false;
        if (plan) *plan = {trimmed, std::move(tail)};
        return true;
    };

    if (C.size() == 1) {
        // The single child x gathers everything below, then takes the top.
        const Square x = C[0];
        if (superSolve(without(V, {t}), {{x, t}})) return {true, ""};
        return {false, "pawns below the top cannot gather on its single capturer"};
    }

    const Square x = C[0];
    const Square y = C[1];
    const auto cx = forest.childrenOf(x);
    const auto cy = forest.childrenOf(y);
    std::vector<Square> common;
    std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(),
                          std::back_inserter(common));

    // One child feeds the other: remove b, super-solve the rest onto a, then
    // a takes the top and the untouched b recaptures there.
    for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        const auto cb = forest.childrenOf(b);
        if (!std::includes(common.begin(), common.end(), cb.begin(), cb.end())) continue;
        if (superSolve(without(V, {t, b}), {{a, t}, {b, t}})) return {true, ""};
    }

    // Three grandchildren, one of which (w) dominates the children of the
    // other two: clear everything else onto w, refill both of the top's
    // children, then take the top twice. Requires w to be the highest square
    // of the trimmed set, otherwise the gathered survivor cannot reach x or y.
    std::vector<Square> cu;
    std::set_union(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(cu));
    if (cu.size() == 3) {
        for (const Square& w : cu) {
            std::vector<Square> others;
            for (const Square& q : cu)
                if (q != w) others.push_back(q);
            const auto ku = forest.childrenOf(others[0]);
            const auto kv = forest.childrenOf(others[1]);
            std::vector<Square> kuv;
            std::set_union(ku.begin(), ku.end(), kv.begin(), kv.end(),
                           std::back_inserter(kuv));
            const auto kw = forest.childrenOf(w);
            if (!std::includes(kw.begin(), kw.end(), kuv.begin(), kuv.end())) continue;
            std::vector<Square> trimmed = without(V, {t, x, y, others[0], others[1]});
            if (trimmed.empty() || uniqueTopOf(trimmed) != std::optional<Square>(w))
                continue;
            // cu = {left, mid, right} by x; mid attacks both x and y, the
            // outer squares attack only their own side. Route the gathered
            // survivor (on w, possibly out of budget) first, refill its
            // landing square with a fresh pawn, send the third to the other
            // side, then take the top twice.
            const Square left = cu[0];
            const Square mid = cu[1];
            const Square right = cu[2];
            CaptureSequence tail;
            if (w == right) {
                tail = {{right, y}, {mid, y}, {left, x}};
            } else if (w == mid) {
                tail = {{mid, x}, {left, x}, {right, y}};
            } else {
                tail = {{left, x}, {mid, x}, {right, y}};
            }
            tail.push_back({x, t});
            tail.push_back({y, t});
            if (superSolve(trimmed, std::move(tail))) return {true, ""};
        }
    }

    // Disjoint single grandchildren: exactly five pawns can clear as two
    // independent two-chains meeting at the top.
    if (common.empty() && cx.size() == 1 && cy.size() == 1) {
        std::vector<Square> expected = {t, x, y, cx[0], cy[0]};
        std::sort(expected.begin(), expected.end());
        if (expected == V) {
            // Two independent two-chains: each feeder climbs onto its child
            // of the top, then both take the top in turn.
            if (plan) *plan = {{cx[0]}, {{cy[0], y}, {x, t}, {y, t}}};
            if (plan) plan->tail.insert(plan->tail.begin(), {cx[0], x});
            return {true, ""};
        }
        return {false, "the top's children have disjoint single feeders but extra pawns remain"};
    }

    return {false, "no gathering pattern fits the pawns below the top"};
}

}  // namespace

PawnDecision decidePawns(const PawnForest& forest) {
    return decideWithPlan(forest, nullptr);
}

CaptureSequence witnessPawnsSuperSolvable(const PawnForest& forest) {
    if (!isSkewedBinaryTree(forest))
        throw NotSolvable("pawn set cannot be cleared with a capture to spare");
    const auto& V = forest.squares;
    const Square root = topSquare(V);

    std::map<int, std::vector<Square>> rows;
    for (const Square& s : V)
        if (!(s == root)) rows[s.y].push_back(s);

    CaptureSequence seq;
    std::optional<Square> carrier;  // survivor of the rows merged so far, budget 1
    for (auto& [row, group] : rows) {
        std::sort(group.begin(), group.end());
        if (group.size() == 1) {
            const Square s = group[0];
            const auto ps = forest.parentsOf(s);
            const Square parent = *std::min_element(ps.begin(), ps.end());
            seq.push_back({s, parent});
            carrier = parent;
        } else {
            const Square a = group[0];
            const Square b = group[1];
            const Square parent{a.x + 1, row + 1};
            // The carrier's pawn has one capture left, so it must move first;
            // the fresh sibling recaptures on the parent and becomes the new
            // carrier with one capture remaining.
            const Square first = (carrier && *carrier == b) ? b : a;
            const Square second = (first == a) ? b : a;
            seq.push_back({first, parent});
            seq.push_back({second, parent});
            carrier = parent;
        }
    }
    return seq;
}

CaptureSequence witnessPawns(const PawnForest& forest) {
    CasePlan plan;
    PawnDecision decision = decideWithPlan(forest, &plan);
    if (!decision.solvable) throw NotSolvable(decision.reason);
    CaptureSequence seq = witnessPawnsSuperSolvable(forestOf(plan.trimmed));
    seq.insert(seq.end(), plan.tail.begin(), plan.tail.end());
    return seq;
}

}  // namespace solo
