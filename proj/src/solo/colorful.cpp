#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "solo/reduction.h"
#include "solo/tree.h"

namespace solo {

namespace {

// Vertex layout of the compiled graph (k classes, n reds per class, b blues).
struct GadgetLayout {
    int reds = 0;  // k * n
    int blues = 0;
    int k = 0;
    int red(int i) const { return i - 1; }
    int blue(int l) const { return reds + l - 1; }
    int partner(int i) const { return reds + blues + i - 1; }
    int spikeBase(int i) const { return 2 * reds + blues + 4 * (i - 1); }
    int spikeP(int i) const { return spikeBase(i); }
    int spikeQ(int i) const { return spikeBase(i) + 1; }
    int spikeR(int i) const { return spikeBase(i) + 2; }
    int spikeS(int i) const { return spikeBase(i) + 3; }
    int guard(int j) const { return 6 * reds + blues + j - 1; }
    int hub() const { return 6 * reds + blues + k; }
    int tailP() const { return hub() + 1; }
    int tailQ() const { return hub() + 2; }
    int vertexCount() const { return 6 * reds + blues + k + 3; }
};

}  // namespace

ReductionOutput colorfulRbdsToGraph(const ColorfulRBDSInstance& inst,
                                    const std::optional<std::vector<int>>& selection) {
    inst.validate();
    const GadgetLayout L{inst.base.redCount, inst.base.blueCount, inst.base.k};

    ReductionOutput out;
    CaptureGraph g;
    g.directed = false;
    g.maxBudget = 2;
    g.budgets.assign(static_cast<std::size_t>(L.vertexCount()), 2);
    auto edge = [&g](int a, int b) { g.edges.push_back(std::minmax(a, b)); };

    for (const auto& [r, b] : inst.base.edges) edge(L.red(r), L.blue(b));
    for (int i = 1; i <= L.reds; ++i) {
        edge(L.red(i), L.partner(i));
        edge(L.partner(i), L.spikeP(i));
        edge(L.partner(i), L.spikeQ(i));
        edge(L.spikeP(i), L.spikeR(i));
        edge(L.spikeQ(i), L.spikeS(i));
        edge(L.partner(i), L.guard(inst.classOf[static_cast<std::size_t>(i - 1)]));
        edge(L.partner(i), L.hub());
        out.provenance["red " + std::to_string(i)] = {
            std::to_string(L.red(i)),    std::to_string(L.partner(i)),
            std::to_string(L.spikeP(i)), std::to_string(L.spikeQ(i)),
            std::to_string(L.spikeR(i)), std::to_string(L.spikeS(i))};
    }
    for (int l = 1; l <= L.blues; ++l)
        out.provenance["blue " + std::to_string(l)] = {std::to_string(L.blue(l))};
    for (int j = 1; j <= L.k; ++j)
        out.provenance["class " + std::to_string(j)] = {std::to_string(L.guard(j))};
    edge(L.hub(), L.tailP());
    edge(L.tailP(), L.tailQ());
    out.provenance["hub"] = {std::to_string(L.hub())};
    out.provenance["tail"] = {std::to_string(L.tailP()), std::to_string(L.tailQ())};
    g.validate();
    out.graph = g;

    if (selection) {
        if (!inst.validSelection(*selection))
            throw InvalidDominatingSet("selection must pick one red vertex per class and dominate every blue vertex");

        // The selection induces a spanning tree rooted at the hub: the
        // full gadget skeleton, each guard attached to its class's chosen
        // partner, and each blue vertex attached to its smallest chosen
        // dominator. Every internal vertex other than the root keeps a leaf
        // child, so the tree clears onto the hub.
        RootedTree tree;
        tree.vertexCount = L.vertexCount();
        tree.root = L.hub();
        for (int i = 1; i <= L.reds; ++i) {
            tree.edges.push_back({L.red(i), L.partner(i)});
            tree.edges.push_back({L.partner(i), L.spikeP(i)});
            tree.edges.push_back({L.partner(i), L.spikeQ(i)});
            tree.edges.push_back({L.spikeP(i), L.spikeR(i)});
            tree.edges.push_back({L.spikeQ(i), L.spikeS(i)});
            tree.edges.push_back({L.partner(i), L.hub()});
        }
        for (int j = 1; j <= L.k; ++j)
            tree.edges.push_back({L.partner((*selection)[static_cast<std::size_t>(j - 1)]), L.guard(j)});
        auto nbrs = inst.base.redNeighborsByBlue();
        for (int l = 1; l <= L.blues; ++l) {
            int dominator = 0;
            for (int r : nbrs[static_cast<std::size_t>(l - 1)]) {
                if (std::find(selection->begin(), selection->end(), r) != selection->end()) {
                    dominator = r;
                    break;
                }
            }
            tree.edges.push_back({L.red(dominator), L.blue(l)});
        }
        tree.edges.push_back({L.hub(), L.tailP()});
        tree.edges.push_back({L.tailP(), L.tailQ()});
        tree.validate();

        GraphCaptureSequence w = witnessTreeCapture(tree);
        if (!verifyGraphSequence(g, w).success)
            throw Error("embedded clearing sequence failed verification; this is a library bug");
        out.embeddedGraphWitness = std::move(w);
    }
    return out;
}

}  // namespace solo
