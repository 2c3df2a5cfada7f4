#include "solo/tree.h"

#include <algorithm>
#include <functional>
#include <string>

namespace solo {

void RootedTree::validate() const {
    if (vertexCount < 1) throw MalformedInstance("a tree needs at least one vertex");
    if (root < 0 || root >= vertexCount)
        throw MalformedInstance("root " + std::to_string(root) + " outside 0.." +
                                std::to_string(vertexCount - 1));
    if (static_cast<int>(edges.size()) != vertexCount - 1)
        throw MalformedInstance("a tree on " + std::to_string(vertexCount) + " vertices needs " +
                                std::to_string(vertexCount - 1) + " edges, got " +
                                std::to_string(edges.size()));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertexCount));
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= vertexCount || b < 0 || b >= vertexCount)
            throw MalformedInstance("tree edge references a vertex out of range");
        if (a == b) throw MalformedInstance("self-loop in tree");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> seen(static_cast<std::size_t>(vertexCount), false);
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
    // With |E| = V-1, connectivity implies acyclicity.
    if (reached != vertexCount) throw MalformedInstance("tree edges do not connect all vertices");
}

std::vector<std::vector<int>> RootedTree::childrenByParent() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertexCount));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(vertexCount));
    std::vector<int> parent(static_cast<std::size_t>(vertexCount), -1);
    std::vector<int> stack{root};
    parent[static_cast<std::size_t>(root)] = root;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = v;
                children[static_cast<std::size_t>(v)].push_back(w);
                stack.push_back(w);
            }
        }
    }
    for (auto& list : children) std::sort(list.begin(), list.end());
    return children;
}

CaptureGraph RootedTree::toCaptureGraph(int budget) const {
    CaptureGraph g;
    g.directed = false;
    g.maxBudget = budget;
    g.budgets.assign(static_cast<std::size_t>(vertexCount), budget);
    for (const auto& [a, b] : edges) g.edges.push_back(std::minmax(a, b));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

// Structural level-0 test: every internal vertex other than the root must
// have a leaf child.
bool structurallyLevel0(const std::vector<std::vector<int>>& children, int root) {
    for (int v = 0; v < static_cast<int>(children.size()); ++v) {
        const auto& kids = children[static_cast<std::size_t>(v)];
        if (kids.empty() || v == root) continue;
        const bool leafChild = std::any_of(kids.begin(), kids.end(), [&](int c) {
            return children[static_cast<std::size_t>(c)].empty();
        });
        if (!leafChild) return false;
    }
    return true;
}

bool structurallyLevel1(const std::vector<std::vector<int>>& children, int root) {
    if (children.size() == 1) return true;
    for (int v = 0; v < static_cast<int>(children.size()); ++v) {
        const auto& kids = children[static_cast<std::size_t>(v)];
        if (kids.empty()) continue;
        const bool leafChild = std::any_of(kids.begin(), kids.end(), [&](int c) {
            return children[static_cast<std::size_t>(c)].empty();
        });
        if (!leafChild) return false;
    }
    (void)root;
    return true;
}

}  // namespace

bool treeSolvable(const RootedTree& t, int level) {
    t.validate();
    if (level != 0 && level != 1)
        throw MalformedInstance("solvability level must be 0 or 1, got " + std::to_string(level));
    const auto children = t.childrenByParent();

    // Subtree recursion: a subtree gathers onto its root with a capture to
    // spare iff it is a single vertex, or its root has a leaf child (the
    // reserved final capturer) and every child subtree can do the same.
    std::function<bool(int)> gatherable = [&](int v) -> bool {
        const auto& kids = children[static_cast<std::size_t>(v)];
        if (kids.empty()) return true;
        const bool leafChild = std::any_of(kids.begin(), kids.end(), [&](int c) {
            return children[static_cast<std::size_t>(c)].empty();
        });
        if (!leafChild) return false;
        return std::all_of(kids.begin(), kids.end(), gatherable);
    };

    bool recursive;
    if (level == 1) {
        recursive = gatherable(t.root);
    } else {
        const auto& kids = children[static_cast<std::size_t>(t.root)];
        recursive = std::all_of(kids.begin(), kids.end(), gatherable);
    }

    const bool structural = level == 1 ? structurallyLevel1(children, t.root)
                                       : structurallyLevel0(children, t.root);
    if (recursive != structural)
        throw Error("tree solvability formulations disagree; this is a library bug");
    return recursive;
}

GraphCaptureSequence witnessTreeCapture(const RootedTree& t) {
    if (!treeSolvable(t, 0))
        throw NotSolvable("tree tokens cannot be gathered onto the root");
    const auto children = t.childrenByParent();
    GraphCaptureSequence seq;

    // Clears the subtree under v onto v. For a non-leaf subtree the smallest
    // leaf child is reserved to capture last, so the gathered token keeps a
    // capture in hand for the hop onto v's parent.
    std::function<void(int)> gather = [&](int v) {
        const auto& kids = children[static_cast<std::size_t>(v)];
        if (kids.empty()) return;
        int reserved = -1;
        for (int c : kids) {
            if (children[static_cast<std::size_t>(c)].empty()) {
                reserved = c;
                break;
            }
        }
        for (int c : kids) {
            if (c == reserved) continue;
            gather(c);
            seq.push_back({c, v});
        }
        seq.push_back({reserved, v});
    };

    for (int c : children[static_cast<std::size_t>(t.root)]) {
        gather(c);
        seq.push_back({c, t.root});
    }
    return seq;
}

CharacterizationResult decideUndirectedByCharacterization(const CaptureGraph& g,
                                                          std::uint64_t treeCap) {
    g.validate();
    if (g.directed)
        throw MalformedInstance("the spanning-tree characterization applies to undirected graphs");
    for (int b : g.budgets)
        if (b != 2) throw MalformedInstance("the spanning-tree characterization assumes uniform budget 2");
    const int V = g.vertexCount();

    CharacterizationResult result;
    if (V == 1) {
        result.solvable = true;
        result.witnessTree = RootedTree{1, {}, 0};
        return result;
    }
    if (!g.underlyingConnected()) return result;

    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges) edges.push_back(std::minmax(a, b));
    std::sort(edges.begin(), edges.end());
    const int E = static_cast<int>(edges.size());

    // Union-find with an undo stack for the include/exclude enumeration.
    std::vector<int> parent(static_cast<std::size_t>(V));
    std::vector<int> size(static_cast<std::size_t>(V), 1);
    for (int v = 0; v < V; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };

    std::vector<std::pair<int, int>> chosen;

    std::function<bool(int)> enumerate = [&](int idx) -> bool {
        if (static_cast<int>(chosen.size()) == V - 1) {
            if (++result.treesEnumerated > treeCap)
                throw SearchBudgetExceeded(result.treesEnumerated);
            RootedTree tree{V, chosen, 0};
            for (int root = 0; root < V; ++root) {
                tree.root = root;
                if (structurallyLevel0(tree.childrenByParent(), root)) {
                    result.witnessTree = tree;
                    return true;
                }
            }
            return false;
        }
        if (idx == E) return false;
        if (V - 1 - static_cast<int>(chosen.size()) > E - idx) return false;  // too few edges left

        const auto [a, b] = edges[static_cast<std::size_t>(idx)];
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) {
            // Include the edge.
            int child = ra;
            int parentRoot = rb;
            if (size[static_cast<std::size_t>(child)] > size[static_cast<std::size_t>(parentRoot)])
                std::swap(child, parentRoot);
            parent[static_cast<std::size_t>(child)] = parentRoot;
            size[static_cast<std::size_t>(parentRoot)] += size[static_cast<std::size_t>(child)];
            chosen.push_back(edges[static_cast<std::size_t>(idx)]);
            if (enumerate(idx + 1)) return true;
            chosen.pop_back();
            size[static_cast<std::size_t>(parentRoot)] -= size[static_cast<std::size_t>(child)];
            parent[static_cast<std::size_t>(child)] = child;
            // Exclude the edge.
            return enumerate(idx + 1);
        }
        // The edge would close a cycle; it can only be excluded.
        return enumerate(idx + 1);
    };

    result.solvable = enumerate(0);
    return result;
}

}  // namespace solo
