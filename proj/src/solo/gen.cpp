#include "solo/gen.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "solo/formats.h"
#include "solo/rng.h"

namespace solo {
namespace {

void requireSize(const std::string& family, int size, int lo, int hi) {
    if (size < lo || size > hi)
        throw UnsupportedFamily("family '" + family + "' requires size in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                                std::to_string(size));
}

std::string genRooks1d(int size, Rng& rng) {
    std::string cells;
    for (int i = 0; i < size; ++i) {
        const int pick = rng.below(4);
        cells += pick == 3 ? '.' : static_cast<char>('0' + pick);
    }
    return cells + "\n";
}

std::vector<Square> distinctSquares(int count, int window, Rng& rng) {
    std::set<Square> taken;
    while (static_cast<int>(taken.size()) < count) {
        Square sq{1 + rng.below(window), 1 + rng.below(window)};
        taken.insert(sq);
    }
    return {taken.begin(), taken.end()};
}

std::string genPawns(int size, Rng& rng) {
    Configuration config;
    config.maxBudget = 2;
    for (const auto& sq : distinctSquares(size, 6, rng))
        config.pieces.push_back({PieceKind::PawnWhite, sq, 2});
    return emitConfiguration(config);
}

std::string genD1(int size, Rng& rng) {
    constexpr PieceKind kinds[] = {PieceKind::Rook, PieceKind::Queen, PieceKind::Bishop,
                                   PieceKind::Knight, PieceKind::PawnWhite};
    Configuration config;
    config.maxBudget = 1;
    for (const auto& sq : distinctSquares(size, 4, rng)) {
        const int budget = rng.below(4) == 0 ? 0 : 1;
        config.pieces.push_back({kinds[rng.below(5)], sq, budget});
    }
    return emitConfiguration(config);
}

// Decodes a uniformly random labeled tree from a random generator sequence
// (smallest-leaf-first decoding keeps the result deterministic).
std::vector<std::pair<int, int>> randomTreeEdges(int vertexCount, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    if (vertexCount <= 1) return edges;
    if (vertexCount == 2) return {{0, 1}};
    std::vector<int> seq(static_cast<std::size_t>(vertexCount - 2));
    for (auto& v : seq) v = rng.below(vertexCount);
    std::vector<int> degree(static_cast<std::size_t>(vertexCount), 1);
    for (int v : seq) ++degree[static_cast<std::size_t>(v)];
    std::set<int> leaves;
    for (int v = 0; v < vertexCount; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (int v : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(std::minmax(leaf, v));
        if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.push_back(std::minmax(a, b));
    return edges;
}

CaptureGraph uniformGraph(int vertexCount, bool directed,
                          std::vector<std::pair<int, int>> edges) {
    CaptureGraph g;
    g.directed = directed;
    g.maxBudget = 2;
    g.budgets.assign(static_cast<std::size_t>(vertexCount), 2);
    g.edges = std::move(edges);
    g.validate();
    return g;
}

std::string genTree(int size, Rng& rng) {
    return emitCaptureGraph(uniformGraph(size, false, randomTreeEdges(size, rng)));
}

std::string genGraph(int size, Rng& rng) {
    auto edges = randomTreeEdges(size, rng);
    std::set<std::pair<int, int>> present(edges.begin(), edges.end());
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (!present.count({i, j}) && rng.below(4) == 0) edges.emplace_back(i, j);
    return emitCaptureGraph(uniformGraph(size, false, std::move(edges)));
}

std::string genDag(int size, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (rng.below(3) == 0) edges.emplace_back(i, j);
    return emitCaptureGraph(uniformGraph(size, true, std::move(edges)));
}

std::string genRbds(int size, Rng& rng) {
    RBDSInstance inst;
    inst.redCount = size;
    inst.blueCount = size;
    inst.k = 1 + rng.below(std::min(2, size));
    for (int red = 1; red <= size; ++red)
        for (int blue = 1; blue <= size; ++blue)
            if (rng.below(2) == 0) inst.edges.emplace_back(red, blue);
    inst.validate();
    return emitRbds(inst);
}

std::string genCnf(int size, Rng& rng) {
    CnfFormula formula;
    formula.variableCount = size;
    const int clauseCount = size + 1;
    for (int c = 0; c < clauseCount; ++c) {
        const int width = 1 + rng.below(std::min(3, size));
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < width) {
            const int v = 1 + rng.below(size);
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        std::vector<int> clause;
        for (int v : vars) clause.push_back(rng.below(2) == 0 ? v : -v);
        formula.clauses.push_back(std::move(clause));
    }
    formula.validate();
    return emitDimacs(formula);
}

}  // namespace

std::string genInstance(const std::string& family, int size, std::uint64_t seed) {
    Rng rng(seed);
    if (family == "rooks1d") {
        requireSize(family, size, 1, 1000);
        return genRooks1d(size, rng);
    }
    if (family == "pawns") {
        requireSize(family, size, 1, 36);
        return genPawns(size, rng);
    }
    if (family == "d1") {
        requireSize(family, size, 1, 16);
        return genD1(size, rng);
    }
    if (family == "trees") {
        requireSize(family, size, 1, 64);
        return genTree(size, rng);
    }
    if (family == "graphs") {
        requireSize(family, size, 1, 64);
        return genGraph(size, rng);
    }
    if (family == "dags") {
        requireSize(family, size, 1, 64);
        return genDag(size, rng);
    }
    if (family == "rbds") {
        requireSize(family, size, 1, 8);
        return genRbds(size, rng);
    }
    if (family == "cnf") {
        requireSize(family, size, 1, 16);
        return genCnf(size, rng);
    }
    throw UnsupportedFamily("unknown generator family '" + family +
                            "' (supported: rooks1d, pawns, d1, trees, graphs, dags, rbds, cnf)");
}

}  // namespace solo
