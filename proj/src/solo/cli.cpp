#include "solo/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "solo/d1.h"
#include "solo/formats.h"
#include "solo/gen.h"
#include "solo/pawns.h"
#include "solo/reduction.h"
#include "solo/rooks1d.h"
#include "solo/solver.h"
#include "solo/sweep.h"
#include "solo/tree.h"

namespace solo {
namespace {

using nlohmann::json;

std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void writeTextFile(const std::string& path, const std::string& text) {
    std::ofstream outFile(path, std::ios::binary);
    if (!outFile) throw Error("cannot write file: " + path);
    outFile << text;
}

long long parseIntArg(const std::string& text, const std::string& what) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw Error("expected " + what + ", got '" + text + "'");
    return value;
}

Square parseSquareArg(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error("expected a square '<x>,<y>', got '" + text + "'");
    Square sq;
    sq.x = static_cast<int>(parseIntArg(text.substr(0, comma), "an x coordinate"));
    sq.y = static_cast<int>(parseIntArg(text.substr(comma + 1), "a y coordinate"));
    if (sq.x < 1 || sq.y < 1) throw Error("coordinates must be >= 1, got '" + text + "'");
    return sq;
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
    std::string file;
    std::string target;
    int leftover = 0;
    std::uint64_t cap = 10'000'000;
    std::string witnessPath;
    bool jsonMode = false;
};

int runSolve(const SolveArgs& a, std::ostream& out) {
    const ParsedInstance inst = parseInstance(readTextFile(a.file));
    json j{{"command", "solve"}};
    bool solvable = false;
    if (inst.board) {
        SolveOptions options;
        options.requireLeftoverBudget = a.leftover;
        options.stateCap = a.cap;
        if (!a.target.empty()) options.target = parseSquareArg(a.target);
        const SolveResult result = solveExact(*inst.board, options);
        solvable = result.solvable;
        j["solvable"] = solvable;
        j["statesExplored"] = result.statesExplored;
        if (solvable) j["finalSquare"] = to_string(*result.targetSquare);
        if (solvable && !a.witnessPath.empty()) {
            writeTextFile(a.witnessPath, emitCaptureSequence(*result.witness));
            j["witness"] = a.witnessPath;
        }
        if (!a.jsonMode) {
            out << (solvable ? "SOLVABLE" : "UNSOLVABLE") << '\n';
            if (solvable) out << "final square: " << to_string(*result.targetSquare) << '\n';
            out << "states explored: " << result.statesExplored << '\n';
        }
    } else {
        GraphSolveOptions options;
        options.requireLeftoverBudget = a.leftover;
        options.stateCap = a.cap;
        if (!a.target.empty())
            options.targetVertex = static_cast<int>(parseIntArg(a.target, "a vertex id"));
        const GraphSolveResult result = solveGraphExact(*inst.graph, options);
        solvable = result.solvable;
        j["solvable"] = solvable;
        j["statesExplored"] = result.statesExplored;
        if (solvable) j["finalVertex"] = *result.targetVertex;
        if (solvable && !a.witnessPath.empty()) {
            writeTextFile(a.witnessPath, emitGraphSequence(*result.witness));
            j["witness"] = a.witnessPath;
        }
        if (!a.jsonMode) {
            out << (solvable ? "SOLVABLE" : "UNSOLVABLE") << '\n';
            if (solvable) out << "final vertex: " << *result.targetVertex << '\n';
            out << "states explored: " << result.statesExplored << '\n';
        }
    }
    if (a.jsonMode) out << j.dump(2) << '\n';
    return solvable ? 0 : 1;
}

// --- decide --------------------------------------------------------------

struct DecideOutcome {
    bool solvable = false;
    std::string algo;
    json detail = json::object();
    std::vector<std::string> textLines;
    std::optional<std::string> witnessText;
};

DecideOutcome decideRooks1dInstance(const RookString& s) {
    DecideOutcome o;
    o.algo = "rooks1d";
    const auto decision = decideRooks1D(s);
    o.solvable = decision.solvable;
    if (o.solvable) {
        o.detail["finalCell"] = *decision.cell;
        o.textLines.push_back("final cell: " + std::to_string(*decision.cell));
        o.witnessText = emitCaptureSequence(witnessRooks1D(s, *decision.cell));
    }
    return o;
}

DecideOutcome decidePawnsInstance(const Configuration& config) {
    const PawnForest forest = PawnForest::fromConfiguration(config);
    DecideOutcome o;
    o.algo = "pawns";
    const auto decision = decidePawns(forest);
    o.solvable = decision.solvable;
    if (o.solvable) {
        const Square top = *forest.uniqueTop();
        o.detail["finalSquare"] = to_string(top);
        o.textLines.push_back("final square: " + to_string(top));
        o.witnessText = emitCaptureSequence(witnessPawns(forest));
    } else if (!decision.reason.empty()) {
        o.detail["reason"] = decision.reason;
        o.textLines.push_back("reason: " + decision.reason);
    }
    return o;
}

DecideOutcome decideD1Instance(const Configuration& config) {
    DecideOutcome o;
    o.algo = "d1";
    const auto decision = decideD1(config);
    o.solvable = decision.solvable;
    if (o.solvable) {
        o.detail["finalSquare"] = to_string(*decision.target);
        o.textLines.push_back("final square: " + to_string(*decision.target));
        o.witnessText = emitCaptureSequence(witnessD1(config));
    }
    return o;
}

void requireUndirectedUniform2(const CaptureGraph& g, const std::string& name) {
    if (g.directed)
        throw MalformedInstance("the " + name + " handles undirected instances only; use `solve`");
    for (int budget : g.budgets)
        if (budget != 2)
            throw MalformedInstance("the " + name + " requires every budget = 2; use `solve`");
}

// True when no edge closes a cycle (union-find over the undirected edges).
bool undirectedAcyclic(const CaptureGraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertexCount()));
    for (int v = 0; v < g.vertexCount(); ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const auto& [a, b] : g.edges) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    return true;
}

DecideOutcome decideTreeInstance(const CaptureGraph& g) {
    requireUndirectedUniform2(g, "tree recursion");
    DecideOutcome o;
    o.algo = "tree";
    if (g.vertexCount() == 0) throw MalformedInstance("instance has no vertices");
    if (!g.underlyingConnected()) {
        o.solvable = false;
        o.detail["reason"] = "disconnected: captures cannot merge components";
        o.textLines.push_back("reason: disconnected: captures cannot merge components");
        return o;
    }
    RootedTree probe{g.vertexCount(), g.edges, 0};
    probe.validate();
    for (int root = 0; root < g.vertexCount(); ++root) {
        const RootedTree t{g.vertexCount(), g.edges, root};
        if (treeSolvable(t, 0)) {
            o.solvable = true;
            o.detail["finalVertex"] = root;
            o.textLines.push_back("final vertex: " + std::to_string(root));
            o.witnessText = emitGraphSequence(witnessTreeCapture(t));
            break;
        }
    }
    return o;
}

DecideOutcome decideCharacterizationInstance(const CaptureGraph& g) {
    requireUndirectedUniform2(g, "spanning-tree characterization");
    DecideOutcome o;
    o.algo = "characterization";
    const auto result = decideUndirectedByCharacterization(g);
    o.solvable = result.solvable;
    o.detail["treesEnumerated"] = result.treesEnumerated;
    if (o.solvable) {
        o.detail["finalVertex"] = result.witnessTree->root;
        o.textLines.push_back("final vertex: " + std::to_string(result.witnessTree->root));
        o.witnessText = emitGraphSequence(witnessTreeCapture(*result.witnessTree));
    }
    return o;
}

bool allRooksOnFirstFile(const Configuration& config) {
    if (config.pieces.empty()) return false;
    for (const auto& piece : config.pieces)
        if (piece.kind != PieceKind::Rook || piece.square.x != 1) return false;
    return true;
}

RookString rookStringFromBoard(const Configuration& config) {
    int length = 0;
    for (const auto& piece : config.pieces) length = std::max(length, piece.square.y);
    RookString s;
    s.maxBudget = config.maxBudget;
    s.cells.assign(static_cast<std::size_t>(length), -1);
    for (const auto& piece : config.pieces)
        s.cells[static_cast<std::size_t>(piece.square.y - 1)] = piece.budget;
    return s;
}

std::string chooseBoardAlgo(const Configuration& config) {
    if (config.pieces.empty())
        throw MalformedInstance("instance has no pieces");
    if (allRooksOnFirstFile(config)) return "rooks1d";
    bool allPawns2 = true;
    bool budgetsAtMostOne = true;
    for (const auto& piece : config.pieces) {
        if (piece.kind != PieceKind::PawnWhite || piece.budget != 2) allPawns2 = false;
        if (piece.budget > 1) budgetsAtMostOne = false;
    }
    if (allPawns2) return "pawns";
    if (budgetsAtMostOne) return "d1";
    throw MalformedInstance("no fast decider matches this instance; use `solve`");
}

struct DecideArgs {
    std::string file;
    std::string inlineRooks;
    std::string algo;
    std::string witnessPath;
    bool jsonMode = false;
};

int runDecide(const DecideArgs& a, std::ostream& out) {
    DecideOutcome o;
    if (!a.inlineRooks.empty()) {
        if (!a.algo.empty() && a.algo != "rooks1d")
            throw Error("--rooks1d implies --algo rooks1d");
        o = decideRooks1dInstance(RookString::fromText(a.inlineRooks));
    } else {
        if (a.file.empty())
            throw Error("an instance file (or --rooks1d <cells>) is required");
        const ParsedInstance inst = parseInstance(readTextFile(a.file));
        if (inst.board) {
            const Configuration& config = *inst.board;
            const std::string chosen = a.algo.empty() ? chooseBoardAlgo(config) : a.algo;
            if (chosen == "rooks1d") {
                if (!allRooksOnFirstFile(config))
                    throw MalformedInstance(
                        "--algo rooks1d requires an all-rook instance on the x=1 file");
                o = decideRooks1dInstance(rookStringFromBoard(config));
            } else if (chosen == "pawns") {
                o = decidePawnsInstance(config);
            } else if (chosen == "d1") {
                o = decideD1Instance(config);
            } else if (chosen == "tree" || chosen == "characterization") {
                throw Error("--algo " + chosen + " requires a graph instance");
            } else {
                throw Error("unknown --algo '" + chosen +
                            "' (supported: rooks1d, pawns, d1, tree, characterization)");
            }
        } else {
            const CaptureGraph& g = *inst.graph;
            std::string chosen = a.algo;
            if (chosen.empty()) {
                if (g.directed)
                    throw MalformedInstance(
                        "no fast decider handles directed instances; use `solve`");
                chosen = undirectedAcyclic(g) ? "tree" : "characterization";
            }
            if (chosen == "tree") {
                o = decideTreeInstance(g);
            } else if (chosen == "characterization") {
                o = decideCharacterizationInstance(g);
            } else if (chosen == "rooks1d" || chosen == "pawns" || chosen == "d1") {
                throw Error("--algo " + chosen + " requires a board instance");
            } else {
                throw Error("unknown --algo '" + chosen +
                            "' (supported: rooks1d, pawns, d1, tree, characterization)");
            }
        }
    }
    json j{{"command", "decide"}, {"algo", o.algo}, {"solvable", o.solvable}};
    j.update(o.detail);
    if (o.solvable && !a.witnessPath.empty()) {
        writeTextFile(a.witnessPath, o.witnessText.value_or(""));
        j["witness"] = a.witnessPath;
    }
    if (a.jsonMode) {
        out << j.dump(2) << '\n';
    } else {
        out << (o.solvable ? "SOLVABLE" : "UNSOLVABLE") << '\n';
        out << "algorithm: " << o.algo << '\n';
        for (const auto& line : o.textLines) out << line << '\n';
    }
    return o.solvable ? 0 : 1;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    std::string witnessPath;
    bool jsonMode = false;
};

int runVerify(const VerifyArgs& a, std::ostream& out) {
    const ParsedInstance inst = parseInstance(readTextFile(a.file));
    const std::string witnessText = readTextFile(a.witnessPath);
    json j{{"command", "verify"}};
    bool ok = false;
    if (inst.board) {
        const auto report = verifySequence(*inst.board, parseCaptureSequence(witnessText));
        ok = report.success;
        j["ok"] = ok;
        j["remainingPieces"] = report.remainingPieces;
        if (report.finalSquare) j["finalSquare"] = to_string(*report.finalSquare);
        if (report.finalBudget) j["finalBudget"] = *report.finalBudget;
        if (!ok) {
            j["reason"] = report.reason;
            if (report.failedIndex) j["failedIndex"] = *report.failedIndex;
        }
        if (!a.jsonMode) {
            out << (ok ? "OK" : "FAIL") << '\n';
            if (ok) {
                out << "final square: " << to_string(*report.finalSquare) << '\n';
                out << "final budget: " << *report.finalBudget << '\n';
            } else {
                out << "reason: " << report.reason << '\n';
                if (report.failedIndex) out << "failed move index: " << *report.failedIndex << '\n';
                out << "remaining pieces: " << report.remainingPieces << '\n';
            }
        }
    } else {
        const auto report = verifyGraphSequence(*inst.graph, parseGraphSequence(witnessText));
        ok = report.success;
        j["ok"] = ok;
        j["remainingTokens"] = report.remainingTokens;
        if (report.finalVertex) j["finalVertex"] = *report.finalVertex;
        if (report.finalBudget) j["finalBudget"] = *report.finalBudget;
        if (!inst.graph->directed) j["usedEdgesFormSpanningTree"] = report.usedEdgesFormSpanningTree;
        if (!ok) {
            j["reason"] = report.reason;
            if (report.failedIndex) j["failedIndex"] = *report.failedIndex;
        }
        if (!a.jsonMode) {
            out << (ok ? "OK" : "FAIL") << '\n';
            if (ok) {
                out << "final vertex: " << *report.finalVertex << '\n';
                out << "final budget: " << *report.finalBudget << '\n';
            } else {
                out << "reason: " << report.reason << '\n';
                if (report.failedIndex) out << "failed move index: " << *report.failedIndex << '\n';
                out << "remaining tokens: " << report.remainingTokens << '\n';
            }
        }
    }
    if (a.jsonMode) out << j.dump(2) << '\n';
    return ok ? 0 : 1;
}

// --- reduce --------------------------------------------------------------

struct ReduceArgs {
    std::string kind;
    std::string file;
    std::string outPath;
    std::string witnessPath;
    bool embed = false;
    int spacing = -1;
    long long bound = -1;
    bool jsonMode = false;
};

int runReduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
    const bool embedable = a.kind == "rbds-to-rooks" || a.kind == "colorful-to-graph" ||
                           a.kind == "sat-to-dag";
    if (a.embed && !embedable)
        throw Error("--embed-witness applies to rbds-to-rooks, colorful-to-graph and sat-to-dag");

    const std::string sourceText = readTextFile(a.file);
    json j{{"command", "reduce"}, {"kind", a.kind}};
    std::string instanceText;
    std::optional<std::string> witnessText;
    bool sourceSolved = true;

    if (a.kind == "rbds-to-rooks") {
        const RBDSInstance inst = parseRbds(sourceText).base;
        std::optional<std::vector<int>> solution;
        if (a.embed) {
            solution = inst.solveByEnumeration();
            sourceSolved = solution.has_value();
        }
        const ReductionOutput output = rbdsToRooks(inst);
        instanceText = emitConfiguration(*output.board);
        j["targetSquare"] = to_string(rbdsTargetSquare(inst));
        j["provenance"] = output.provenance;
        if (solution)
            witnessText = emitCaptureSequence(rbdsWitnessToSequence(inst, *solution));
    } else if (a.kind == "colorful-to-graph") {
        const ColorfulRBDSInstance inst = parseRbds(sourceText).colorful();
        std::optional<std::vector<int>> selection;
        if (a.embed) {
            selection = inst.solveByEnumeration();
            sourceSolved = selection.has_value();
        }
        const ReductionOutput output = colorfulRbdsToGraph(inst, selection);
        instanceText = emitCaptureGraph(*output.graph);
        j["provenance"] = output.provenance;
        if (output.embeddedGraphWitness)
            witnessText = emitGraphSequence(*output.embeddedGraphWitness);
    } else if (a.kind == "sat-to-dag") {
        const CnfFormula formula = parseDimacs(sourceText);
        std::optional<std::vector<bool>> assignment;
        if (a.embed) {
            assignment = formula.solveByEnumeration();
            sourceSolved = assignment.has_value();
        }
        const ReductionOutput output = threeSatToDag(formula, assignment);
        instanceText = emitCaptureGraph(*output.graph);
        j["provenance"] = output.provenance;
        if (output.embeddedGraphWitness)
            witnessText = emitGraphSequence(*output.embeddedGraphWitness);
    } else if (a.kind == "rooks-to-queens") {
        const Configuration config = parseConfiguration(sourceText);
        const auto spacing = a.spacing >= 0 ? std::optional<int>(a.spacing) : std::nullopt;
        instanceText = emitConfiguration(rooksToQueens(config, spacing));
    } else if (a.kind == "uniformize-queens") {
        const Configuration config = parseConfiguration(sourceText);
        const auto bound = a.bound > 0 ? std::optional<long long>(a.bound) : std::nullopt;
        instanceText = emitConfiguration(uniformizeQueenBudgets(config, bound));
    } else if (a.kind == "bishops-to-rooks") {
        instanceText = emitConfiguration(rotateBishopsToRooks(parseConfiguration(sourceText)));
    } else if (a.kind == "knights-to-graph") {
        instanceText = emitCaptureGraph(knightGraphFromBoard(parseConfiguration(sourceText)));
    } else {
        throw UnsupportedFamily(
            "unknown reduction kind '" + a.kind +
            "' (supported: rbds-to-rooks, colorful-to-graph, sat-to-dag, rooks-to-queens, "
            "uniformize-queens, bishops-to-rooks, knights-to-graph)");
    }

    if (a.embed) {
        j["embedded"] = witnessText.has_value();
        if (!sourceSolved) err << "note: source instance is unsolvable; no witness embedded\n";
    }
    if (witnessText && !a.witnessPath.empty()) {
        writeTextFile(a.witnessPath, *witnessText);
        j["witness"] = a.witnessPath;
    }
    if (!a.outPath.empty()) {
        writeTextFile(a.outPath, instanceText);
        j["out"] = a.outPath;
    }
    if (a.jsonMode) {
        j["instance"] = instanceText;
        out << j.dump(2) << '\n';
    } else if (a.outPath.empty()) {
        out << instanceText;
    }
    return a.embed && !sourceSolved ? 1 : 0;
}

// --- gen -----------------------------------------------------------------

struct GenArgs {
    std::string family;
    int size = 6;
    std::uint64_t seed = 1;
    std::string outPath;
    bool jsonMode = false;
};

int runGen(const GenArgs& a, std::ostream& out) {
    const std::string text = genInstance(a.family, a.size, a.seed);
    json j{{"command", "gen"},
           {"family", a.family},
           {"size", a.size},
           {"seed", a.seed},
           {"instance", text}};
    if (!a.outPath.empty()) {
        writeTextFile(a.outPath, text);
        j["out"] = a.outPath;
    }
    if (a.jsonMode) out << j.dump(2) << '\n';
    else if (a.outPath.empty()) out << text;
    return 0;
}

// --- sweep ---------------------------------------------------------------

struct SweepArgs {
    std::string family;
    int size = 6;
    std::uint64_t seed = 1;
    int samples = 100;
    bool exhaustive = false;
    int maxBudget = 2;
    std::uint64_t cap = 10'000'000;
    bool serial = false;
    bool jsonMode = false;
};

int runSweepCommand(const SweepArgs& a, std::ostream& out) {
    SweepSpec spec;
    spec.family = sweepFamilyFromName(a.family);
    spec.size = a.size;
    spec.seed = a.seed;
    spec.samples = a.samples;
    spec.exhaustive = a.exhaustive;
    spec.maxBudget = a.maxBudget;
    spec.stateCap = a.cap;
    const SweepResult result = a.serial ? runSweepSerial(spec) : runSweep(spec);
    json j{{"command", "sweep"},
           {"family", a.family},
           {"instances", result.instances},
           {"overflows", result.overflows},
           {"mismatches", result.mismatches},
           {"reports", result.reports}};
    if (a.jsonMode) {
        out << j.dump(2) << '\n';
    } else {
        out << "family: " << a.family << '\n';
        out << "instances: " << result.instances << '\n';
        out << "overflows: " << result.overflows << '\n';
        out << "mismatches: " << result.mismatches << '\n';
        for (const auto& report : result.reports) out << report << '\n';
    }
    return result.mismatches == 0 ? 0 : 1;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solver, fast deciders, instance compilers and cross-validation sweeps\n"
                 "for capture-to-one puzzles on boards and graphs."};
    app.require_subcommand(1);

    SolveArgs solveArgs;
    auto* solveCmd = app.add_subcommand("solve", "Exhaustively solve a board or graph instance");
    solveCmd->add_option("file", solveArgs.file, "Instance file (solo-chess v1 or capture-graph v1)")
        ->required();
    solveCmd->add_option("--target", solveArgs.target,
                         "Final square '<x>,<y>' (board) or vertex id (graph) to require");
    solveCmd->add_option("--leftover", solveArgs.leftover,
                         "Require at least this much final budget");
    solveCmd->add_option("--cap", solveArgs.cap, "State cap for the exhaustive search");
    solveCmd->add_option("--witness", solveArgs.witnessPath, "Write the solving sequence here");
    solveCmd->add_flag("--json", solveArgs.jsonMode, "Structured output");

    DecideArgs decideArgs;
    auto* decideCmd =
        app.add_subcommand("decide", "Run the matching fast decider (never the exhaustive search)");
    auto* decideFileOpt = decideCmd->add_option("file", decideArgs.file, "Instance file");
    decideCmd->add_option("--rooks1d", decideArgs.inlineRooks,
                          "Decide this one-line rook string directly (e.g. 0212112100)")
        ->excludes(decideFileOpt);
    decideCmd->add_option("--algo", decideArgs.algo,
                          "Force a decider: rooks1d, pawns, d1, tree, characterization");
    decideCmd->add_option("--witness", decideArgs.witnessPath,
                          "Write the constructive clearing sequence here when solvable");
    decideCmd->add_flag("--json", decideArgs.jsonMode, "Structured output");

    VerifyArgs verifyArgs;
    auto* verifyCmd = app.add_subcommand("verify", "Replay a witness file against an instance");
    verifyCmd->add_option("file", verifyArgs.file, "Instance file")->required();
    verifyCmd->add_option("--witness", verifyArgs.witnessPath, "Witness file to replay")
        ->required();
    verifyCmd->add_flag("--json", verifyArgs.jsonMode, "Structured output");

    ReduceArgs reduceArgs;
    auto* reduceCmd = app.add_subcommand("reduce", "Compile a source instance into a game instance");
    reduceCmd
        ->add_option("kind", reduceArgs.kind,
                     "rbds-to-rooks | colorful-to-graph | sat-to-dag | rooks-to-queens | "
                     "uniformize-queens | bishops-to-rooks | knights-to-graph")
        ->required();
    reduceCmd->add_option("file", reduceArgs.file, "Source instance file")->required();
    reduceCmd->add_option("--out", reduceArgs.outPath,
                          "Write the compiled instance here instead of stdout");
    auto* reduceWitnessOpt = reduceCmd->add_option(
        "--witness", reduceArgs.witnessPath, "Write the embedded clearing sequence here");
    reduceCmd
        ->add_flag("--embed-witness", reduceArgs.embed,
                   "Solve the source by enumeration and embed a clearing sequence "
                   "(exit 1 when the source is unsolvable)")
        ->needs(reduceWitnessOpt);
    reduceCmd->add_option("--spacing", reduceArgs.spacing,
                          "rooks-to-queens: column spread factor (default: piece count squared)");
    reduceCmd->add_option("--bound", reduceArgs.bound,
                          "uniformize-queens: search bound for support placement");
    reduceCmd->add_flag("--json", reduceArgs.jsonMode, "Structured output");

    GenArgs genArgs;
    auto* genCmd = app.add_subcommand("gen", "Emit a seeded random instance");
    genCmd->add_option("family", genArgs.family,
                       "rooks1d | pawns | d1 | trees | graphs | dags | rbds | cnf")
        ->required();
    genCmd->add_option("--size,--len", genArgs.size, "Family-specific size");
    genCmd->add_option("--seed", genArgs.seed, "Generator seed");
    genCmd->add_option("--out", genArgs.outPath, "Write the instance here instead of stdout");
    genCmd->add_flag("--json", genArgs.jsonMode, "Structured output");

    SweepArgs sweepArgs;
    auto* sweepCmd = app.add_subcommand(
        "sweep", "Cross-validate a decider family against the exhaustive solver");
    sweepCmd->add_option("family", sweepArgs.family,
                         "rooks1d | pawns | trees | graphs | d1 | reductions")
        ->required();
    sweepCmd->add_option("--size,--max-len", sweepArgs.size, "Family-specific size bound");
    sweepCmd->add_option("--seed", sweepArgs.seed, "Sweep seed");
    sweepCmd->add_option("--samples", sweepArgs.samples, "Number of sampled instances");
    sweepCmd->add_flag("--exhaustive", sweepArgs.exhaustive,
                       "rooks1d: check every string of length 1..size");
    sweepCmd->add_option("--max-budget", sweepArgs.maxBudget,
                         "rooks1d: alphabet is digits 0..maxBudget plus '.'");
    sweepCmd->add_option("--cap", sweepArgs.cap, "Oracle state cap per instance");
    sweepCmd->add_flag("--serial", sweepArgs.serial, "Force the serial reference sweep");
    sweepCmd->add_flag("--json", sweepArgs.jsonMode, "Structured output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solveCmd->parsed()) return runSolve(solveArgs, out);
        if (decideCmd->parsed()) return runDecide(decideArgs, out);
        if (verifyCmd->parsed()) return runVerify(verifyArgs, out);
        if (reduceCmd->parsed()) return runReduce(reduceArgs, out, err);
        if (genCmd->parsed()) return runGen(genArgs, out);
        if (sweepCmd->parsed()) return runSweepCommand(sweepArgs, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const SearchBudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const PlacementOverflow& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: expected a subcommand\n";
    return 2;
}

}  // namespace solo
