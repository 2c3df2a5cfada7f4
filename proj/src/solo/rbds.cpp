#include <algorithm>
#include <set>
#include <string>

#include "solo/reduction.h"
#include "solo/rooks1d.h"

namespace solo {

Square rbdsTargetSquare(const RBDSInstance& inst) {
    return Square{2 * inst.blueCount + 1, inst.redCount + inst.blueCount + inst.k + 1};
}

ReductionOutput rbdsToRooks(const RBDSInstance& inst) {
    inst.validate();
    const int n = inst.redCount;
    const int m = inst.blueCount;
    const int k = inst.k;
    const int top = 2 * m + 1;

    ReductionOutput out;
    Configuration board;
    board.maxBudget = 2;
    auto put = [&](int x, int y, int budget, const std::string& entity) {
        Square sq{x, y};
        board.pieces.push_back({PieceKind::Rook, sq, budget});
        out.provenance[entity].push_back(to_string(sq));
    };

    for (int i = 1; i <= n; ++i) put(top, i, 1, "red " + std::to_string(i));
    auto nbrs = inst.redNeighborsByBlue();
    for (int j = 1; j <= m; ++j) {
        const std::string entity = "blue " + std::to_string(j);
        for (int l : nbrs[static_cast<std::size_t>(j - 1)]) put(2 * j - 1, l, 1, entity);
        put(2 * j - 1, n + j, 2, entity);
    }
    for (int l = 1; l <= k; ++l) put(top, n + m + l, 2, "cleaner " + std::to_string(l));
    put(top, n + m + k + 1, 1, "final cell");

    board = board.normalized();
    board.validate();
    out.board = std::move(board);
    return out;
}

CaptureSequence rbdsWitnessToSequence(const RBDSInstance& inst,
                                      const std::vector<int>& dominatingSet,
                                      const std::map<int, int>& chosenNeighbor) {
    inst.validate();
    const int n = inst.redCount;
    const int m = inst.blueCount;
    const int k = inst.k;
    const int top = 2 * m + 1;

    std::set<int> chosen(dominatingSet.begin(), dominatingSet.end());
    if (static_cast<int>(chosen.size()) > k)
        throw InvalidDominatingSet("dominating set has more than k vertices");
    for (int r : chosen) {
        if (r < 1 || r > n) throw InvalidDominatingSet("dominating set references a red vertex out of range");
    }

    auto nbrs = inst.redNeighborsByBlue();
    // f[j-1] = the chosen neighbor blue vertex j collapses onto.
    std::vector<int> f(static_cast<std::size_t>(m), 0);
    for (int j = 1; j <= m; ++j) {
        const auto& row = nbrs[static_cast<std::size_t>(j - 1)];
        if (auto it = chosenNeighbor.find(j); it != chosenNeighbor.end()) {
            int r = it->second;
            if (!chosen.count(r) || !std::binary_search(row.begin(), row.end(), r))
                throw InvalidDominatingSet("pinned choice for blue vertex " + std::to_string(j) +
                                           " is not a dominating neighbor");
            f[static_cast<std::size_t>(j - 1)] = r;
        } else {
            for (int r : row) {
                if (chosen.count(r)) {
                    f[static_cast<std::size_t>(j - 1)] = r;
                    break;
                }
            }
            if (f[static_cast<std::size_t>(j - 1)] == 0)
                throw InvalidDominatingSet("blue vertex " + std::to_string(j) + " is undominated");
        }
    }

    CaptureSequence moves;
    auto mv = [&](int x1, int y1, int x2, int y2) {
        moves.push_back({Square{x1, y1}, Square{x2, y2}});
    };

    // Terminal rooks collapse onto the chosen neighbor's column, nearest
    // first on each side so the path is never blocked.
    for (int j = 1; j <= m; ++j) {
        const int row = 2 * j - 1;
        const int fj = f[static_cast<std::size_t>(j - 1)];
        std::vector<int> left, right;
        for (int l : nbrs[static_cast<std::size_t>(j - 1)]) {
            if (l < fj) left.push_back(l);
            else if (l > fj) right.push_back(l);
        }
        std::sort(left.rbegin(), left.rend());
        for (int l : left) mv(row, l, row, fj);
        for (int l : right) mv(row, l, row, fj);
    }

    // Collectors pick the stacks up and deliver them onto the top file,
    // highest row first so the file above each delivery is already clear.
    for (int j = m; j >= 1; --j) {
        const int row = 2 * j - 1;
        const int fj = f[static_cast<std::size_t>(j - 1)];
        mv(row, n + j, row, fj);
        mv(row, fj, top, fj);
    }

    // The top file is now a one-dimensional instance; clear it onto the
    // final cell.
    const int tgt = n + m + k + 1;
    std::set<int> landed(f.begin(), f.end());
    RookString s;
    s.maxBudget = 2;
    s.cells.assign(static_cast<std::size_t>(tgt), -1);
    for (int c = 1; c <= tgt; ++c) {
        int v = -1;
        if (landed.count(c)) v = 0;
        else if (c <= n) v = 1;
        else if (c > n + m && c <= n + m + k) v = 2;
        else if (c == tgt) v = 1;
        s.cells[static_cast<std::size_t>(c - 1)] = v;
    }
    for (const CaptureMove& step : witnessRooks1D(s, tgt)) {
        mv(top, step.from.y, top, step.to.y);
    }
    return moves;
}

}  // namespace solo
