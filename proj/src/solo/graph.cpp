#include "solo/graph.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "solo/flatset.h"

namespace solo {

void CaptureGraph::validate() const {
    const int V = vertexCount();
    for (int v = 0; v < V; ++v) {
        if (budgets[static_cast<std::size_t>(v)] < 0 ||
            budgets[static_cast<std::size_t>(v)] > maxBudget) {
            throw MalformedInstance("vertex " + std::to_string(v) + " has budget " +
                                    std::to_string(budgets[static_cast<std::size_t>(v)]) +
                                    " outside [0, " + std::to_string(maxBudget) + "]");
        }
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= V || b < 0 || b >= V)
            throw MalformedInstance("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") references a vertex outside 0.." + std::to_string(V - 1));
        if (a == b) throw MalformedInstance("self-loop on vertex " + std::to_string(a));
        const std::pair<int, int> canon =
            directed ? std::pair{a, b} : std::pair<int, int>(std::minmax(a, b));
        if (!seen.insert(canon).second)
            throw MalformedInstance("duplicate edge (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")");
    }
}

std::vector<std::vector<int>> CaptureGraph::captureNeighbors() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertexCount()));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        if (!directed) adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<std::vector<int>> CaptureGraph::underlyingNeighbors() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertexCount()));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

bool CaptureGraph::underlyingConnected() const {
    const int V = vertexCount();
    if (V <= 1) return true;
    const auto adj = underlyingNeighbors();
    std::vector<bool> seen(static_cast<std::size_t>(V), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == V;
}

std::string to_string(const GraphMove& m) {
    return std::to_string(m.from) + " -> " + std::to_string(m.to);
}

namespace {

using detail::FlatSet128;
using detail::FlatSet64;
using detail::Key128;
using detail::mix64;

struct Searcher {
    const GraphSolveOptions& opts;
    int V;
    int topBudget;
    std::vector<std::vector<int>> capAdj;
    std::vector<std::vector<int>> undAdj;
    // Fast connectivity masks when every vertex id fits one word.
    bool useMasks = false;
    std::vector<std::uint64_t> undMask;
    // Memo state packing: per-vertex value (budget + 1, or 0 when empty),
    // `packBits` bits each; a whole state fits one word when packable.
    int packBits = 2;
    bool packable = false;
    std::uint64_t states = 0;
    FlatSet64 failed64;
    FlatSet128 failed128;
    GraphCaptureSequence path;
    std::optional<int> finalVertex;

    Searcher(const CaptureGraph& g, const GraphSolveOptions& o) : opts(o) {
        V = g.vertexCount();
        topBudget = g.maxBudget;
        capAdj = g.captureNeighbors();
        undAdj = g.underlyingNeighbors();
        useMasks = V <= 64;
        if (useMasks) {
            undMask.assign(static_cast<std::size_t>(V), 0);
            for (int v = 0; v < V; ++v)
                for (int w : undAdj[static_cast<std::size_t>(v)])
                    undMask[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
        }
        packBits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(topBudget + 1))));
        packable = V * packBits <= 64;
    }

    // val[v] = token budget on v, or -1 when v is empty.
    std::uint64_t packedKey(const std::vector<int>& val) const {
        std::uint64_t key = 0;
        for (int v = 0; v < V; ++v)
            key |= static_cast<std::uint64_t>(val[static_cast<std::size_t>(v)] + 1)
                   << (v * packBits);
        return key;  // nonzero whenever any token remains
    }

    Key128 hashedKey(const std::vector<int>& val) const {
        Key128 k{0x9e3779b97f4a7c15ULL, 0x6a09e667f3bcc909ULL};
        for (int v = 0; v < V; ++v) {
            const std::uint64_t packed =
                static_cast<std::uint64_t>(v) |
                (static_cast<std::uint64_t>(val[static_cast<std::size_t>(v)] + 1) << 32);
            k.lo = mix64(k.lo ^ packed);
            k.hi = mix64(k.hi ^ (packed * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        }
        if (k == Key128{}) k = Key128{1, 1};
        return k;
    }

    bool occupiedConnected(const std::vector<int>& val, int tokens) const {
        if (tokens <= 1) return true;
        if (useMasks) {
            std::uint64_t occ = 0;
            for (int v = 0; v < V; ++v)
                if (val[static_cast<std::size_t>(v)] >= 0) occ |= std::uint64_t{1} << v;
            std::uint64_t comp = occ & (~occ + 1);  // lowest occupied vertex
            std::uint64_t frontier = comp;
            while (frontier != 0) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const std::uint64_t fresh = undMask[static_cast<std::size_t>(v)] & occ & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            return comp == occ;
        }
        std::vector<int> stack;
        std::vector<bool> seen(static_cast<std::size_t>(V), false);
        int start = 0;
        while (val[static_cast<std::size_t>(start)] < 0) ++start;
        seen[static_cast<std::size_t>(start)] = true;
        stack.push_back(start);
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : undAdj[static_cast<std::size_t>(v)]) {
                if (val[static_cast<std::size_t>(w)] >= 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == tokens;
    }

    struct Candidate {
        int victimBudget;
        int attackerBudgetDesc;
        int victim;
        int attacker;
        friend bool operator<(const Candidate& a, const Candidate& b) {
            if (a.victimBudget != b.victimBudget) return a.victimBudget < b.victimBudget;
            if (a.attackerBudgetDesc != b.attackerBudgetDesc)
                return a.attackerBudgetDesc < b.attackerBudgetDesc;
            if (a.victim != b.victim) return a.victim < b.victim;
            return a.attacker < b.attacker;
        }
    };

    bool rec(std::vector<int>& val, int tokens) {
        if (tokens == 1) {
            int v = 0;
            while (val[static_cast<std::size_t>(v)] < 0) ++v;
            if (opts.targetVertex && v != *opts.targetVertex) return false;
            if (val[static_cast<std::size_t>(v)] < opts.requireLeftoverBudget) return false;
            finalVertex = v;
            return true;
        }

        int budgetSum = 0;
        for (int v = 0; v < V; ++v)
            if (val[static_cast<std::size_t>(v)] > 0) budgetSum += val[static_cast<std::size_t>(v)];
        if (budgetSum < tokens - 1 + opts.requireLeftoverBudget) return false;
        // Captures land only on occupied vertices, so an emptied vertex can
        // never be reoccupied.
        if (opts.targetVertex && val[static_cast<std::size_t>(*opts.targetVertex)] < 0)
            return false;
        // Tokens in different components of the occupied induced subgraph can
        // never meet.
        if (!occupiedConnected(val, tokens)) return false;

        std::uint64_t key64 = 0;
        Key128 key128;
        if (opts.memoize) {
            if (packable) {
                key64 = packedKey(val);
                if (failed64.contains(key64)) return false;
            } else {
                key128 = hashedKey(val);
                if (failed128.contains(key128)) return false;
            }
        }
        if (++states > opts.stateCap) throw SearchBudgetExceeded(states);

        // Expansion order measured to shrink the search on hard instances:
        // low-budget victims first, high-budget attackers first.
        std::vector<Candidate> moves;
        for (int u = 0; u < V; ++u) {
            const int bu = val[static_cast<std::size_t>(u)];
            if (bu < 1) continue;
            for (int w : capAdj[static_cast<std::size_t>(u)]) {
                const int bw = val[static_cast<std::size_t>(w)];
                if (bw < 0) continue;
                moves.push_back({bw, topBudget + 1 - bu, w, u});
            }
        }
        std::sort(moves.begin(), moves.end());

        for (const Candidate& m : moves) {
            const int bu = val[static_cast<std::size_t>(m.attacker)];
            const int bw = val[static_cast<std::size_t>(m.victim)];
            val[static_cast<std::size_t>(m.attacker)] = -1;
            val[static_cast<std::size_t>(m.victim)] = bu - 1;
            path.push_back({m.attacker, m.victim});
            if (rec(val, tokens - 1)) return true;
            path.pop_back();
            val[static_cast<std::size_t>(m.attacker)] = bu;
            val[static_cast<std::size_t>(m.victim)] = bw;
        }

        if (opts.memoize) {
            if (packable) {
                failed64.insert(key64);
            } else {
                failed128.insert(key128);
            }
        }
        return false;
    }
};

GraphSolveResult runSearch(const CaptureGraph& g, const GraphSolveOptions& options) {
    g.validate();
    if (g.vertexCount() < 1) throw MalformedInstance("cannot solve an empty graph");
    if (options.targetVertex &&
        (*options.targetVertex < 0 || *options.targetVertex >= g.vertexCount()))
        throw MalformedInstance("target vertex out of range");
    Searcher searcher(g, options);
    std::vector<int> val = g.budgets;
    GraphSolveResult result;
    result.solvable = searcher.rec(val, g.vertexCount());
    result.statesExplored = searcher.states;
    if (result.solvable) {
        result.witness = searcher.path;
        result.targetVertex = searcher.finalVertex;
    }
    return result;
}

}  // namespace

GraphSolveResult solveGraphExact(const CaptureGraph& g, const GraphSolveOptions& options) {
    return runSearch(g, options);
}

GraphSolveResult solveDagExact(const CaptureGraph& g, const GraphSolveOptions& options) {
    if (!g.directed) throw MalformedInstance("expected a directed graph");
    // Kahn's algorithm: a directed graph is acyclic iff all vertices drain.
    const int V = g.vertexCount();
    std::vector<int> indegree(static_cast<std::size_t>(V), 0);
    const auto adj = g.captureNeighbors();
    for (int v = 0; v < V; ++v)
        for (int w : adj[static_cast<std::size_t>(v)]) ++indegree[static_cast<std::size_t>(w)];
    std::vector<int> queue;
    for (int v = 0; v < V; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    int drained = 0;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        ++drained;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    if (drained != V) throw MalformedInstance("expected a directed acyclic graph");
    return runSearch(g, options);
}

GraphVerificationReport verifyGraphSequence(const CaptureGraph& g,
                                            const GraphCaptureSequence& seq) {
    g.validate();
    const int V = g.vertexCount();
    GraphVerificationReport report;
    std::vector<int> val = g.budgets;
    int tokens = V;

    std::set<std::pair<int, int>> edgeSet;
    for (const auto& [a, b] : g.edges)
        edgeSet.insert(g.directed ? std::pair{a, b} : std::pair<int, int>(std::minmax(a, b)));

    auto fail = [&](std::size_t index, const std::string& why) {
        report.success = false;
        report.failedIndex = index;
        report.reason = why;
        report.remainingTokens = static_cast<std::size_t>(tokens);
        return report;
    };

    std::set<std::pair<int, int>> usedEdges;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const GraphMove& m = seq[i];
        if (m.from < 0 || m.from >= V || m.to < 0 || m.to >= V)
            return fail(i, "move references a vertex outside the graph");
        if (m.from == m.to) return fail(i, "a token cannot capture itself");
        if (val[static_cast<std::size_t>(m.from)] < 0)
            return fail(i, "no token on the capturing vertex");
        if (val[static_cast<std::size_t>(m.to)] < 0)
            return fail(i, "no token on the captured vertex");
        if (val[static_cast<std::size_t>(m.from)] < 1)
            return fail(i, "capturing token has no budget left");
        const std::pair<int, int> canon =
            g.directed ? std::pair{m.from, m.to} : std::pair<int, int>(std::minmax(m.from, m.to));
        if (!edgeSet.contains(canon)) return fail(i, "no edge supports this capture");
        val[static_cast<std::size_t>(m.to)] = val[static_cast<std::size_t>(m.from)] - 1;
        val[static_cast<std::size_t>(m.from)] = -1;
        --tokens;
        usedEdges.insert(std::minmax(m.from, m.to));
    }

    report.remainingTokens = static_cast<std::size_t>(tokens);
    if (tokens != 1) {
        report.success = false;
        report.reason = "sequence leaves " + std::to_string(tokens) + " tokens, expected 1";
        return report;
    }
    report.success = true;
    for (int v = 0; v < V; ++v) {
        if (val[static_cast<std::size_t>(v)] >= 0) {
            report.finalVertex = v;
            report.finalBudget = val[static_cast<std::size_t>(v)];
        }
    }

    // A full clearing uses exactly V-1 captures; they form a spanning tree
    // iff the distinct edges number V-1 and connect every vertex.
    if (static_cast<int>(usedEdges.size()) == V - 1) {
        std::vector<int> parent(static_cast<std::size_t>(V));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        int components = V;
        for (const auto& [a, b] : usedEdges) {
            const int ra = find(a);
            const int rb = find(b);
            if (ra != rb) {
                parent[static_cast<std::size_t>(ra)] = rb;
                --components;
            }
        }
        report.usedEdgesFormSpanningTree = components == 1;
    }
    return report;
}

}  // namespace solo
