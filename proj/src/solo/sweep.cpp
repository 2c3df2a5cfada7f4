#include "solo/sweep.h"

#include <algorithm>
#include <optional>

#include "solo/d1.h"
#include "solo/formats.h"
#include "solo/gen.h"
#include "solo/graph.h"
#include "solo/pawns.h"
#include "solo/reduction.h"
#include "solo/rng.h"
#include "solo/rooks1d.h"
#include "solo/solver.h"
#include "solo/tree.h"

namespace solo {
namespace {

struct Outcome {
    bool mismatch = false;
    bool overflow = false;
    std::string report;
};

Outcome mismatchOutcome(std::string report) { return {true, false, std::move(report)}; }

// Embeds a multi-line instance text into a one-line report.
std::string inlineText(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '\n') {
            if (!out.empty() && out.back() != ';') out += "; ";
        } else {
            out += c;
        }
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

std::string verdict(bool solvable) { return solvable ? "solvable" : "unsolvable"; }

// --- rooks1d -----------------------------------------------------------

Outcome checkRooks1dString(const SweepSpec& spec, const std::string& cells) {
    const RookString s = RookString::fromText(cells, spec.maxBudget);
    const auto fast = decideRooks1D(s);
    const bool anyRook =
        std::any_of(s.cells.begin(), s.cells.end(), [](int v) { return v >= 0; });
    if (!anyRook) {
        // Zero pieces: nothing can remain, and the exact solver refuses empty
        // boards, so only the deciders' verdicts are cross-checked.
        if (fast.solvable)
            return mismatchOutcome("rooks1d \"" + cells + "\": empty string declared solvable");
        if (spec.maxBudget == 2 && decideRooks1D_d2(s).solvable)
            return mismatchOutcome("rooks1d \"" + cells +
                                   "\": budget-2 decider declares empty string solvable");
        return {};
    }
    SolveOptions options;
    options.stateCap = spec.stateCap;
    const auto oracle = solveExact(s.toConfiguration(), options);
    if (fast.solvable != oracle.solvable)
        return mismatchOutcome("rooks1d \"" + cells + "\": decider " + verdict(fast.solvable) +
                               ", oracle " + verdict(oracle.solvable));
    if (spec.maxBudget == 2 && decideRooks1D_d2(s).solvable != fast.solvable)
        return mismatchOutcome("rooks1d \"" + cells + "\": budget-2 decider disagrees");
    if (fast.solvable) {
        const auto witness = witnessRooks1D(s, *fast.cell);
        const auto replay = verifySequence(s.toConfiguration(), witness);
        if (!replay.success || replay.finalSquare != RookString::cellSquare(*fast.cell))
            return mismatchOutcome("rooks1d \"" + cells + "\": witness replay failed (" +
                                   replay.reason + ")");
    }
    return {};
}

long long exhaustiveRooks1dCount(int size, int alphabet) {
    long long total = 0;
    long long power = 1;
    for (int len = 1; len <= size; ++len) {
        power *= alphabet;
        total += power;
        if (total > 50'000'000)
            throw UnsupportedFamily("exhaustive rooks1d sweep too large at size " +
                                    std::to_string(size));
    }
    return total;
}

std::string exhaustiveRooks1dDecode(long long index, int size, int alphabet) {
    for (int len = 1; len <= size; ++len) {
        long long power = 1;
        for (int i = 0; i < len; ++i) power *= alphabet;
        if (index >= power) {
            index -= power;
            continue;
        }
        std::string cells(static_cast<std::size_t>(len), '.');
        for (int pos = len - 1; pos >= 0; --pos) {
            const int digit = static_cast<int>(index % alphabet);
            index /= alphabet;
            cells[static_cast<std::size_t>(pos)] =
                digit == alphabet - 1 ? '.' : static_cast<char>('0' + digit);
        }
        return cells;
    }
    throw UnsupportedFamily("exhaustive rooks1d index out of range");
}

Outcome checkRooks1d(const SweepSpec& spec, int index, std::uint64_t instSeed) {
    if (spec.exhaustive)
        return checkRooks1dString(
            spec, exhaustiveRooks1dDecode(index, spec.size, spec.maxBudget + 2));
    Rng rng(instSeed);
    const int len = 1 + rng.below(spec.size);
    std::string cells;
    for (int i = 0; i < len; ++i) {
        const int pick = rng.below(spec.maxBudget + 2);
        cells += pick == spec.maxBudget + 1 ? '.' : static_cast<char>('0' + pick);
    }
    return checkRooks1dString(spec, cells);
}

// --- pawns -------------------------------------------------------------

Outcome checkPawns(const SweepSpec& spec, std::uint64_t instSeed) {
    Rng rng(instSeed);
    const int count = 1 + rng.below(std::min(spec.size, 36));
    const std::string text = genInstance("pawns", count, rng.next());
    const Configuration config = parseConfiguration(text);
    const PawnForest forest = PawnForest::fromConfiguration(config);
    const std::string shown = inlineText(text);

    const auto decision = decidePawns(forest);
    SolveOptions options;
    options.stateCap = spec.stateCap;
    const auto oracle = solveExact(config, options);
    if (decision.solvable != oracle.solvable)
        return mismatchOutcome("pawns [" + shown + "]: decider " + verdict(decision.solvable) +
                               ", oracle " + verdict(oracle.solvable));
    if (decision.solvable) {
        const auto replay = verifySequence(config, witnessPawns(forest));
        if (!replay.success || replay.finalSquare != forest.uniqueTop())
            return mismatchOutcome("pawns [" + shown + "]: witness replay failed (" +
                                   replay.reason + ")");
    }

    const bool sbt = decidePawnsSuperSolvable(forest);
    bool oracleSuper = false;
    if (const auto top = forest.uniqueTop()) {
        SolveOptions superOptions;
        superOptions.target = *top;
        superOptions.requireLeftoverBudget = 1;
        superOptions.stateCap = spec.stateCap;
        oracleSuper = solveExact(config, superOptions).solvable;
    }
    if (sbt != oracleSuper)
        return mismatchOutcome("pawns [" + shown + "]: super-solvability decider " +
                               verdict(sbt) + ", oracle " + verdict(oracleSuper));
    if (sbt) {
        const auto replay = verifySequence(config, witnessPawnsSuperSolvable(forest));
        if (!replay.success || replay.finalBudget.value_or(0) < 1)
            return mismatchOutcome("pawns [" + shown + "]: super witness replay failed (" +
                                   replay.reason + ")");
    }
    return {};
}

// --- trees -------------------------------------------------------------

Outcome checkTrees(const SweepSpec& spec, std::uint64_t instSeed) {
    Rng rng(instSeed);
    const int vertexCount = 1 + rng.below(spec.size);
    const std::string text = genInstance("trees", vertexCount, rng.next());
    const CaptureGraph g = parseCaptureGraph(text);
    const int root = rng.below(vertexCount);
    const RootedTree tree{vertexCount, g.edges, root};
    const std::string shown = inlineText(text) + "; root " + std::to_string(root);

    for (int level = 0; level <= 1; ++level) {
        const bool fast = treeSolvable(tree, level);
        GraphSolveOptions options;
        options.targetVertex = root;
        options.requireLeftoverBudget = level;
        options.stateCap = spec.stateCap;
        const auto oracle = solveGraphExact(g, options);
        if (fast != oracle.solvable)
            return mismatchOutcome("trees [" + shown + "]: level-" + std::to_string(level) +
                                   " recursion " + verdict(fast) + ", oracle " +
                                   verdict(oracle.solvable));
        if (level == 0 && fast) {
            const auto replay = verifyGraphSequence(g, witnessTreeCapture(tree));
            if (!replay.success || replay.finalVertex != root)
                return mismatchOutcome("trees [" + shown + "]: witness replay failed (" +
                                       replay.reason + ")");
        }
    }
    return {};
}

// --- graphs ------------------------------------------------------------

Outcome checkGraphs(const SweepSpec& spec, std::uint64_t instSeed) {
    Rng rng(instSeed);
    const int vertexCount = 1 + rng.below(spec.size);
    const std::string text = genInstance("graphs", vertexCount, rng.next());
    const CaptureGraph g = parseCaptureGraph(text);
    const std::string shown = inlineText(text);

    const auto characterization = decideUndirectedByCharacterization(g);
    GraphSolveOptions options;
    options.stateCap = spec.stateCap;
    const auto oracle = solveGraphExact(g, options);
    if (characterization.solvable != oracle.solvable)
        return mismatchOutcome("graphs [" + shown + "]: characterization " +
                               verdict(characterization.solvable) + ", oracle " +
                               verdict(oracle.solvable));
    if (characterization.solvable) {
        const auto replay = verifyGraphSequence(g, witnessTreeCapture(*characterization.witnessTree));
        if (!replay.success || replay.finalVertex != characterization.witnessTree->root)
            return mismatchOutcome("graphs [" + shown + "]: witness replay failed (" +
                                   replay.reason + ")");
    }
    if (oracle.solvable && g.vertexCount() >= 2) {
        const auto replay = verifyGraphSequence(g, *oracle.witness);
        if (!replay.success || !replay.usedEdgesFormSpanningTree)
            return mismatchOutcome("graphs [" + shown +
                                   "]: oracle witness's used edges are not a spanning tree");
    }
    return {};
}

// --- d1 ----------------------------------------------------------------

Outcome checkD1(const SweepSpec& spec, std::uint64_t instSeed) {
    Rng rng(instSeed);
    const int count = 1 + rng.below(std::min(spec.size, 16));
    const std::string text = genInstance("d1", count, rng.next());
    const Configuration config = parseConfiguration(text);
    const std::string shown = inlineText(text);

    const auto fast = decideD1(config);
    SolveOptions options;
    options.stateCap = spec.stateCap;
    const auto oracle = solveExact(config, options);
    if (fast.solvable != oracle.solvable)
        return mismatchOutcome("d1 [" + shown + "]: decider " + verdict(fast.solvable) +
                               ", oracle " + verdict(oracle.solvable));
    if (fast.solvable) {
        const auto replay = verifySequence(config, witnessD1(config));
        if (!replay.success || replay.finalSquare != fast.target)
            return mismatchOutcome("d1 [" + shown + "]: witness replay failed (" +
                                   replay.reason + ")");
    }
    return {};
}

// --- reductions --------------------------------------------------------

Outcome checkRbdsReduction(const SweepSpec& spec, Rng& rng) {
    RBDSInstance inst;
    inst.redCount = 1 + rng.below(3);
    inst.blueCount = rng.below(3);
    inst.k = 1 + rng.below(2);
    for (int red = 1; red <= inst.redCount; ++red)
        for (int blue = 1; blue <= inst.blueCount; ++blue)
            if (rng.below(2) == 0) inst.edges.emplace_back(red, blue);
    const std::string shown = inlineText(emitRbds(inst));

    const auto truth = inst.solveByEnumeration();
    const auto out = rbdsToRooks(inst);
    SolveOptions options;
    options.target = rbdsTargetSquare(inst);
    options.stateCap = spec.stateCap;
    const auto oracle = solveExact(*out.board, options);
    if (truth.has_value() != oracle.solvable)
        return mismatchOutcome("reductions [" + shown + "]: domination " +
                               verdict(truth.has_value()) + ", compiled board " +
                               verdict(oracle.solvable));
    if (truth) {
        const auto replay = verifySequence(*out.board, rbdsWitnessToSequence(inst, *truth));
        if (!replay.success || replay.finalSquare != rbdsTargetSquare(inst))
            return mismatchOutcome("reductions [" + shown + "]: witness replay failed (" +
                                   replay.reason + ")");
    }
    return {};
}

Outcome checkSatReduction(const SweepSpec& spec, Rng& rng) {
    const CnfFormula formula = parseDimacs(genInstance("cnf", 1 + rng.below(3), rng.next()));
    const std::string shown = inlineText(emitDimacs(formula));

    const auto truth = formula.solveByEnumeration();
    const auto out = threeSatToDag(formula, truth);
    GraphSolveOptions options;
    options.stateCap = spec.stateCap;
    const auto oracle = solveDagExact(*out.graph, options);
    if (truth.has_value() != oracle.solvable)
        return mismatchOutcome("reductions [" + shown + "]: satisfiability " +
                               verdict(truth.has_value()) + ", compiled instance " +
                               verdict(oracle.solvable));
    if (truth && !verifyGraphSequence(*out.graph, *out.embeddedGraphWitness).success)
        return mismatchOutcome("reductions [" + shown + "]: embedded witness replay failed");
    return {};
}

Outcome checkColorfulReduction(const SweepSpec& spec, Rng& rng) {
    // The compiled gadget has 6kn + |B| + k + 3 vertices; k*n <= 2 keeps the
    // exhaustive search well inside the state cap.
    const int shapePick = rng.below(3);
    const int k = shapePick == 2 ? 2 : 1;
    const int n = shapePick == 1 ? 2 : 1;
    ColorfulRBDSInstance inst;
    inst.base.redCount = k * n;
    inst.base.blueCount = 1 + rng.below(2);
    inst.base.k = k;
    for (int red = 1; red <= inst.base.redCount; ++red)
        inst.classOf.push_back((red - 1) / n + 1);
    for (int red = 1; red <= inst.base.redCount; ++red)
        for (int blue = 1; blue <= inst.base.blueCount; ++blue)
            if (rng.below(2) == 0) inst.base.edges.emplace_back(red, blue);
    const std::string shown = inlineText(emitColorfulRbds(inst));

    const auto truth = inst.solveByEnumeration();
    const auto out = colorfulRbdsToGraph(inst, truth);
    GraphSolveOptions options;
    options.stateCap = spec.stateCap;
    const auto oracle = solveGraphExact(*out.graph, options);
    if (truth.has_value() != oracle.solvable)
        return mismatchOutcome("reductions [" + shown + "]: colorful domination " +
                               verdict(truth.has_value()) + ", compiled graph " +
                               verdict(oracle.solvable));
    if (truth && !verifyGraphSequence(*out.graph, *out.embeddedGraphWitness).success)
        return mismatchOutcome("reductions [" + shown + "]: embedded witness replay failed");
    return {};
}

Outcome checkReductions(const SweepSpec& spec, int index, std::uint64_t instSeed) {
    Rng rng(instSeed);
    switch (index % 3) {
        case 0: return checkRbdsReduction(spec, rng);
        case 1: return checkSatReduction(spec, rng);
        default: return checkColorfulReduction(spec, rng);
    }
}

Outcome checkOne(const SweepSpec& spec, int index, std::uint64_t instSeed) {
    try {
        switch (spec.family) {
            case SweepFamily::Rooks1D: return checkRooks1d(spec, index, instSeed);
            case SweepFamily::Pawns: return checkPawns(spec, instSeed);
            case SweepFamily::Trees: return checkTrees(spec, instSeed);
            case SweepFamily::Graphs: return checkGraphs(spec, instSeed);
            case SweepFamily::D1: return checkD1(spec, instSeed);
            case SweepFamily::Reductions: return checkReductions(spec, index, instSeed);
        }
        return mismatchOutcome("unknown family");
    } catch (const SearchBudgetExceeded& e) {
        return {false, true, "instance skipped: " + std::string(e.what())};
    } catch (const std::exception& e) {
        // Any other library error counts as a mismatch: the instances here
        // are all inside the deciders' documented domains.
        return mismatchOutcome("unexpected error: " + std::string(e.what()));
    }
}

std::vector<std::uint64_t> instanceSeeds(const SweepSpec& spec, int count) {
    Rng master(spec.seed);
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
    for (auto& s : seeds) s = master.next();
    return seeds;
}

SweepResult aggregate(const std::vector<Outcome>& outcomes) {
    SweepResult result;
    result.instances = static_cast<int>(outcomes.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& outcome = outcomes[i];
        if (!outcome.mismatch && !outcome.overflow) continue;
        if (outcome.mismatch) ++result.mismatches;
        if (outcome.overflow) ++result.overflows;
        result.reports.push_back("instance " + std::to_string(i) + ": " + outcome.report);
    }
    return result;
}

}  // namespace

SweepFamily sweepFamilyFromName(const std::string& name) {
    if (name == "rooks1d") return SweepFamily::Rooks1D;
    if (name == "pawns") return SweepFamily::Pawns;
    if (name == "trees") return SweepFamily::Trees;
    if (name == "graphs") return SweepFamily::Graphs;
    if (name == "d1") return SweepFamily::D1;
    if (name == "reductions") return SweepFamily::Reductions;
    throw UnsupportedFamily("unknown sweep family '" + name +
                            "' (supported: rooks1d, pawns, trees, graphs, d1, reductions)");
}

std::string sweepFamilyName(SweepFamily family) {
    switch (family) {
        case SweepFamily::Rooks1D: return "rooks1d";
        case SweepFamily::Pawns: return "pawns";
        case SweepFamily::Trees: return "trees";
        case SweepFamily::Graphs: return "graphs";
        case SweepFamily::D1: return "d1";
        case SweepFamily::Reductions: return "reductions";
    }
    return "unknown";
}

int sweepInstanceCount(const SweepSpec& spec) {
    if (spec.exhaustive) {
        if (spec.family != SweepFamily::Rooks1D)
            throw UnsupportedFamily("exhaustive sweeps are supported for rooks1d only");
        return static_cast<int>(exhaustiveRooks1dCount(spec.size, spec.maxBudget + 2));
    }
    return spec.samples;
}

SweepResult runSweepSerial(const SweepSpec& spec) {
    const int count = sweepInstanceCount(spec);
    const auto seeds = instanceSeeds(spec, count);
    std::vector<Outcome> outcomes(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        outcomes[static_cast<std::size_t>(i)] = checkOne(spec, i, seeds[static_cast<std::size_t>(i)]);
    return aggregate(outcomes);
}

SweepResult runSweep(const SweepSpec& spec) {
#ifdef _OPENMP
    const int count = sweepInstanceCount(spec);
    const auto seeds = instanceSeeds(spec, count);
    std::vector<Outcome> outcomes(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i)
        outcomes[static_cast<std::size_t>(i)] = checkOne(spec, i, seeds[static_cast<std::size_t>(i)]);
    return aggregate(outcomes);
#else
    return runSweepSerial(spec);
#endif
}

}  // namespace solo
