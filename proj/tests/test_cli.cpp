#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "solo/cli.h"
#include "solo/formats.h"
#include "solo/gen.h"
#include "solo/graph.h"
#include "solo/reduction.h"
#include "solo/solver.h"
#include "solo/sweep.h"

using namespace solo;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path tempDir() {
    const auto dir = std::filesystem::temp_directory_path() / "solo_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string writeTemp(const std::string& name, const std::string& text) {
    const auto path = tempDir() / name;
    std::ofstream file(path, std::ios::binary);
    REQUIRE(file.good());
    file << text;
    file.close();
    return path.string();
}

std::string readBack(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Instance file formats
// ---------------------------------------------------------------------------

TEST_CASE("board files round-trip through parse and emit in canonical order") {
    // Out-of-order pieces, extra blank lines and CRLF endings all normalize.
    const std::string messy =
        "solo-chess v1 d=2\r\n"
        "\r\n"
        "N 2 3 1\r\n"
        "R 1 1 2\r\n"
        "\r\n"
        "P 3 1 0\r\n";
    const Configuration config = parseConfiguration(messy);
    const std::string canonical = emitConfiguration(config);
    CHECK(canonical ==
          "solo-chess v1 d=2\n"
          "R 1 1 2\n"
          "P 3 1 0\n"
          "N 2 3 1\n");
    // emit(parse(t)) is a fixed point.
    CHECK(emitConfiguration(parseConfiguration(canonical)) == canonical);
}

TEST_CASE("board parser reports locations for malformed input") {
    CHECK_THROWS_AS(parseConfiguration("junk\n"), ParseError);
    CHECK_THROWS_AS(parseConfiguration(""), ParseError);
    CHECK_THROWS_AS(parseConfiguration("solo-chess v2 d=2\n"), ParseError);
    CHECK_THROWS_AS(parseConfiguration("solo-chess v1 d=2\nX 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseConfiguration("solo-chess v1 d=2\nR 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseConfiguration("solo-chess v1 d=2\nR 1 1\n"), ParseError);

    try {
        parseConfiguration("solo-chess v1 d=1\nR 1 1 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 7);
        CHECK(std::string(e.what()).find("exceeds declared maximum d=1") != std::string::npos);
    }

    try {
        parseConfiguration("solo-chess v1 d=2\nR 1 1 1\nQ 1 1 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("duplicate square 1,1") != std::string::npos);
    }
}

TEST_CASE("graph files round-trip and enforce shape") {
    const std::string text =
        "capture-graph v1 directed=0 d=2\n"
        "v 0 2\n"
        "v 1 2\n"
        "v 2 1\n"
        "e 2 0\n"
        "e 1 2\n";
    const CaptureGraph g = parseCaptureGraph(text);
    CHECK(g.vertexCount() == 3);
    CHECK(!g.directed);
    // Undirected edges are stored and emitted as (min, max), sorted.
    CHECK(emitCaptureGraph(g) ==
          "capture-graph v1 directed=0 d=2\n"
          "v 0 2\n"
          "v 1 2\n"
          "v 2 1\n"
          "e 0 2\n"
          "e 1 2\n");
    CHECK(emitCaptureGraph(parseCaptureGraph(emitCaptureGraph(g))) == emitCaptureGraph(g));

    CHECK_THROWS_AS(parseCaptureGraph("capture-graph v1 directed=0 d=2\nv 1 2\n"), ParseError);
    CHECK_THROWS_AS(parseCaptureGraph("capture-graph v1 directed=0 d=2\nv 0 3\n"), ParseError);
    CHECK_THROWS_AS(parseCaptureGraph("capture-graph v1 directed=2 d=2\nv 0 2\n"), ParseError);
    CHECK_THROWS_AS(
        parseCaptureGraph("capture-graph v1 directed=0 d=2\nv 0 2\nv 1 2\ne 0 0\n"), ParseError);
    CHECK_THROWS_AS(
        parseCaptureGraph("capture-graph v1 directed=0 d=2\nv 0 2\nv 1 2\ne 0 1\ne 1 0\n"),
        ParseError);
    CHECK_THROWS_AS(
        parseCaptureGraph("capture-graph v1 directed=0 d=2\nv 0 2\ne 0 1\nv 1 2\n"), ParseError);
    // Directed graphs keep both orientations distinct.
    const CaptureGraph dag =
        parseCaptureGraph("capture-graph v1 directed=1 d=2\nv 0 2\nv 1 2\ne 0 1\ne 1 0\n");
    CHECK(dag.edges.size() == 2);
}

TEST_CASE("witness files round-trip for both move kinds") {
    const CaptureSequence boardSeq{{{1, 2}, {3, 4}}, {{3, 4}, {1, 1}}};
    const std::string boardText = emitCaptureSequence(boardSeq);
    CHECK(boardText == "1,2 -> 3,4\n3,4 -> 1,1\n");
    CHECK(parseCaptureSequence(boardText) == boardSeq);
    CHECK(parseCaptureSequence("").empty());
    CHECK_THROWS_AS(parseCaptureSequence("1,2 => 3,4\n"), ParseError);
    CHECK_THROWS_AS(parseCaptureSequence("1 -> 2\n"), ParseError);
    CHECK_THROWS_AS(parseCaptureSequence("0,1 -> 2,2\n"), ParseError);

    const GraphCaptureSequence graphSeq{{0, 3}, {3, 1}};
    const std::string graphText = emitGraphSequence(graphSeq);
    CHECK(graphText == "0 -> 3\n3 -> 1\n");
    CHECK(parseGraphSequence(graphText) == graphSeq);
    CHECK_THROWS_AS(parseGraphSequence("a -> 1\n"), ParseError);
}

TEST_CASE("rbds files round-trip, with and without the class partition") {
    const std::string plain =
        "rbds v1 n=2 m=2 k=1\n"
        "edge 2 1\n"
        "edge 1 1\n"
        "edge 2 2\n";
    const ParsedRbds parsed = parseRbds(plain);
    CHECK(!parsed.isColorful());
    CHECK(parsed.base.redCount == 2);
    CHECK(parsed.base.blueCount == 2);
    CHECK(parsed.base.k == 1);
    CHECK(emitRbds(parsed.base) ==
          "rbds v1 n=2 m=2 k=1\n"
          "edge 1 1\n"
          "edge 2 1\n"
          "edge 2 2\n");
    CHECK_THROWS_AS(parsed.colorful(), MalformedInstance);

    const std::string colorfulText =
        "rbds v1 n=2 m=1 k=2\n"
        "edge 1 1\n"
        "class 2 2\n"
        "class 1 1\n";
    const ParsedRbds colorfulParsed = parseRbds(colorfulText);
    REQUIRE(colorfulParsed.isColorful());
    const ColorfulRBDSInstance inst = colorfulParsed.colorful();
    CHECK(inst.classOf == std::vector<int>{1, 2});
    CHECK(emitColorfulRbds(inst) ==
          "rbds v1 n=2 m=1 k=2\n"
          "edge 1 1\n"
          "class 1 1\n"
          "class 2 2\n");

    CHECK_THROWS_AS(parseRbds("rbds v1 n=1 m=1 k=1\nedge 2 1\n"), ParseError);
    CHECK_THROWS_AS(parseRbds("rbds v1 n=1 m=1 k=1\nedge 1 1\nedge 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseRbds("rbds v1 n=2 m=1 k=2\nclass 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseRbds("rbds v1 n=1 m=1 k=1\nclass 1 1\nclass 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseRbds("rbds v1 n=1 m=1 k=0\n"), ParseError);
    // Unequal class sizes are a semantic error caught by instance validation.
    CHECK_THROWS_AS(parseRbds("rbds v1 n=3 m=1 k=2\nclass 1 1\nclass 2 1\nclass 3 2\n"),
                    MalformedInstance);
}

TEST_CASE("DIMACS files round-trip and reject malformed clauses") {
    const std::string text =
        "c a comment\n"
        "p cnf 3 2\n"
        "1 -2 3 0\n"
        "c another comment\n"
        "-1 0\n";
    const CnfFormula formula = parseDimacs(text);
    CHECK(formula.variableCount == 3);
    REQUIRE(formula.clauses.size() == 2);
    CHECK(formula.clauses[0] == std::vector<int>{1, -2, 3});
    CHECK(formula.clauses[1] == std::vector<int>{-1});
    CHECK(emitDimacs(formula) == "p cnf 3 2\n1 -2 3 0\n-1 0\n");
    CHECK(emitDimacs(parseDimacs(emitDimacs(formula))) == emitDimacs(formula));

    CHECK_THROWS_AS(parseDimacs(""), ParseError);
    CHECK_THROWS_AS(parseDimacs("1 0\np cnf 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p cnf 1 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p cnf 1 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p cnf 1 1\n1 0 1\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p cnf 1 1\n2 0\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p cnf 1 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p cnf 2 1\n1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
}

TEST_CASE("parseInstance detects the instance kind from the header") {
    CHECK(parseInstance("solo-chess v1 d=2\nR 1 1 1\n").board.has_value());
    CHECK(parseInstance("capture-graph v1 directed=0 d=2\nv 0 2\n").graph.has_value());
    CHECK_THROWS_AS(parseInstance("rbds v1 n=1 m=1 k=1\n"), ParseError);
}

TEST_CASE("knight boards extract to the capture graph on mutual attacks") {
    Configuration config;
    config.maxBudget = 2;
    config.pieces = {{PieceKind::Knight, {1, 1}, 2},
                     {PieceKind::Knight, {3, 1}, 1},
                     {PieceKind::Knight, {2, 3}, 2}};
    const CaptureGraph g = knightGraphFromBoard(config);
    CHECK(emitCaptureGraph(g) ==
          "capture-graph v1 directed=0 d=2\n"
          "v 0 2\n"
          "v 1 1\n"
          "v 2 2\n"
          "e 0 2\n"
          "e 1 2\n");
    // The graph game and the board game agree (knights ignore blockers).
    const auto boardResult = solveExact(config);
    const auto graphResult = solveGraphExact(g);
    CHECK(boardResult.solvable == graphResult.solvable);

    config.pieces[0].kind = PieceKind::Rook;
    CHECK_THROWS_AS(knightGraphFromBoard(config), MalformedInstance);
}

// ---------------------------------------------------------------------------
// Instance generators
// ---------------------------------------------------------------------------

TEST_CASE("generators are deterministic and respect family shapes") {
    for (const std::string family :
         {"rooks1d", "pawns", "d1", "trees", "graphs", "dags", "rbds", "cnf"}) {
        const std::string a = genInstance(family, 6, 42);
        const std::string b = genInstance(family, 6, 42);
        CHECK_MESSAGE(a == b, "family ", family, " must be reproducible");
        CHECK(genInstance(family, 6, 43) != a);  // different seed, different bytes
    }

    const std::string rooks = genInstance("rooks1d", 6, 7);
    REQUIRE(rooks.size() == 7);
    CHECK(rooks.back() == '\n');
    for (char c : rooks.substr(0, 6)) CHECK((c == '.' || (c >= '0' && c <= '2')));

    const Configuration pawns = parseConfiguration(genInstance("pawns", 5, 9));
    CHECK(pawns.pieces.size() == 5);
    for (const auto& piece : pawns.pieces) {
        CHECK(piece.kind == PieceKind::PawnWhite);
        CHECK(piece.budget == 2);
        CHECK(piece.square.x <= 6);
        CHECK(piece.square.y <= 6);
    }

    const Configuration d1 = parseConfiguration(genInstance("d1", 5, 11));
    CHECK(d1.maxBudget == 1);
    CHECK(d1.pieces.size() == 5);
    for (const auto& piece : d1.pieces) {
        CHECK(piece.budget <= 1);
        CHECK(piece.square.x <= 4);
        CHECK(piece.square.y <= 4);
    }

    const CaptureGraph tree = parseCaptureGraph(genInstance("trees", 7, 13));
    CHECK(tree.vertexCount() == 7);
    CHECK(tree.edges.size() == 6);
    CHECK(tree.underlyingConnected());

    const CaptureGraph graph = parseCaptureGraph(genInstance("graphs", 6, 17));
    CHECK(graph.vertexCount() == 6);
    CHECK(graph.underlyingConnected());

    const CaptureGraph dag = parseCaptureGraph(genInstance("dags", 6, 19));
    CHECK(dag.directed);
    for (const auto& [from, to] : dag.edges) CHECK(from < to);

    parseRbds(genInstance("rbds", 3, 23));
    parseDimacs(genInstance("cnf", 3, 29));

    CHECK_THROWS_AS(genInstance("nonesuch", 5, 1), UnsupportedFamily);
    CHECK_THROWS_AS(genInstance("pawns", 37, 1), UnsupportedFamily);
    CHECK_THROWS_AS(genInstance("rooks1d", 0, 1), UnsupportedFamily);
}

// ---------------------------------------------------------------------------
// Sweep harness
// ---------------------------------------------------------------------------

TEST_CASE("every sweep family validates cleanly on sampled instances") {
    for (const auto family : {SweepFamily::Rooks1D, SweepFamily::Pawns, SweepFamily::Trees,
                              SweepFamily::Graphs, SweepFamily::D1, SweepFamily::Reductions}) {
        SweepSpec spec;
        spec.family = family;
        spec.size = family == SweepFamily::Graphs ? 6 : (family == SweepFamily::Pawns ? 7 : 8);
        spec.seed = 5;
        spec.samples = family == SweepFamily::Reductions ? 12 : 25;
        const SweepResult result = runSweepSerial(spec);
        CHECK(result.instances == spec.samples);
        CHECK_MESSAGE(result.mismatches == 0, sweepFamilyName(family), ": ",
                      result.reports.empty() ? "" : result.reports.front());
        CHECK(result.overflows == 0);
    }
}

TEST_CASE("exhaustive rooks1d sweep covers every string and stays clean") {
    SweepSpec spec;
    spec.family = SweepFamily::Rooks1D;
    spec.size = 4;
    spec.exhaustive = true;
    CHECK(sweepInstanceCount(spec) == 4 + 16 + 64 + 256);
    const SweepResult result = runSweepSerial(spec);
    CHECK(result.instances == 340);
    CHECK(result.mismatches == 0);
    CHECK(result.overflows == 0);

    spec.family = SweepFamily::Pawns;
    CHECK_THROWS_AS(sweepInstanceCount(spec), UnsupportedFamily);
}

TEST_CASE("parallel sweep matches the serial reference") {
    SweepSpec spec;
    spec.family = SweepFamily::Trees;
    spec.size = 9;
    spec.seed = 31;
    spec.samples = 60;
    const SweepResult serial = runSweepSerial(spec);
    const SweepResult parallel = runSweep(spec);
    CHECK(serial.instances == parallel.instances);
    CHECK(serial.mismatches == parallel.mismatches);
    CHECK(serial.overflows == parallel.overflows);
    CHECK(serial.reports == parallel.reports);
}

// ---------------------------------------------------------------------------
// CLI: decide
// ---------------------------------------------------------------------------

TEST_CASE("decide --rooks1d prints the verdict and writes a verifiable witness") {
    const auto run = cli({"decide", "--rooks1d", "0212112100"});
    CHECK(run.code == 0);
    CHECK(run.out ==
          "SOLVABLE\n"
          "algorithm: rooks1d\n"
          "final cell: 1\n");
    CHECK(run.err.empty());

    // The witness clears all ten rooks in nine moves and replays cleanly.
    const std::string witnessPath = writeTemp("rooks_witness.txt", "");
    const auto withWitness =
        cli({"decide", "--rooks1d", "0212112100", "--witness", witnessPath});
    CHECK(withWitness.code == 0);
    const CaptureSequence seq = parseCaptureSequence(readBack(witnessPath));
    CHECK(seq.size() == 9);

    const auto json = cli({"decide", "--rooks1d", "0212112100", "--json"});
    CHECK(json.code == 0);
    CHECK(json.out ==
          "{\n"
          "  \"algo\": \"rooks1d\",\n"
          "  \"command\": \"decide\",\n"
          "  \"finalCell\": 1,\n"
          "  \"solvable\": true\n"
          "}\n");

    const auto unsolvable = cli({"decide", "--rooks1d", "00"});
    CHECK(unsolvable.code == 1);
    CHECK(lines(unsolvable.out)[0] == "UNSOLVABLE");
}

TEST_CASE("decide auto-selects the decider from instance contents") {
    // All-rook instance on the x=1 file -> one-dimensional decider.
    const std::string rooks = writeTemp("auto_rooks.board",
                                        "solo-chess v1 d=2\n"
                                        "R 1 1 0\n"
                                        "R 1 2 2\n"
                                        "R 1 3 1\n");
    const auto rookRun = cli({"decide", rooks});
    CHECK(rookRun.code == 0);
    CHECK(lines(rookRun.out)[1] == "algorithm: rooks1d");

    // All-pawn budget-2 instance -> pawn decider.
    const std::string pawns = writeTemp("auto_pawns.board",
                                        "solo-chess v1 d=2\n"
                                        "P 3 3 2\n");
    const auto pawnRun = cli({"decide", pawns});
    CHECK(pawnRun.code == 0);
    CHECK(pawnRun.out ==
          "SOLVABLE\n"
          "algorithm: pawns\n"
          "final square: 3,3\n");

    // Budgets all <= 1 -> budget-one decider.
    const std::string d1 = writeTemp("auto_d1.board",
                                     "solo-chess v1 d=1\n"
                                     "R 1 1 1\n"
                                     "R 5 1 0\n");
    const auto d1Run = cli({"decide", d1});
    CHECK(d1Run.code == 0);
    CHECK(d1Run.out ==
          "SOLVABLE\n"
          "algorithm: d1\n"
          "final square: 5,1\n");

    // Acyclic graph -> tree recursion over all roots.
    const std::string star = writeTemp("auto_star.graph",
                                       "capture-graph v1 directed=0 d=2\n"
                                       "v 0 2\nv 1 2\nv 2 2\nv 3 2\n"
                                       "e 0 1\ne 0 2\ne 0 3\n");
    const std::string starWitness = (tempDir() / "star_witness.txt").string();
    const auto starRun = cli({"decide", star, "--witness", starWitness});
    CHECK(starRun.code == 0);
    CHECK(starRun.out ==
          "SOLVABLE\n"
          "algorithm: tree\n"
          "final vertex: 0\n");
    const auto starVerify = cli({"verify", star, "--witness", starWitness});
    CHECK(starVerify.code == 0);
    CHECK(lines(starVerify.out)[0] == "OK");

    // Cyclic graph -> spanning-tree characterization.
    const std::string triangle = writeTemp("auto_triangle.graph",
                                           "capture-graph v1 directed=0 d=2\n"
                                           "v 0 2\nv 1 2\nv 2 2\n"
                                           "e 0 1\ne 0 2\ne 1 2\n");
    const std::string triWitness = (tempDir() / "triangle_witness.txt").string();
    const auto triRun = cli({"decide", triangle, "--witness", triWitness});
    CHECK(triRun.code == 0);
    CHECK(lines(triRun.out)[1] == "algorithm: characterization");
    const auto triVerify = cli({"verify", triangle, "--witness", triWitness});
    CHECK(triVerify.code == 0);

    // No decider matches mixed kinds with budget 2 -> refusal, not a wrong answer.
    const std::string mixed = writeTemp("auto_mixed.board",
                                        "solo-chess v1 d=2\n"
                                        "Q 1 1 2\n"
                                        "R 2 2 1\n");
    const auto mixedRun = cli({"decide", mixed});
    CHECK(mixedRun.code == 2);
    CHECK(mixedRun.err.find("use `solve`") != std::string::npos);

    // Directed graphs have no fast decider either.
    const std::string dag = writeTemp("auto_dag.graph",
                                      "capture-graph v1 directed=1 d=2\n"
                                      "v 0 2\nv 1 2\n"
                                      "e 0 1\n");
    const auto dagRun = cli({"decide", dag});
    CHECK(dagRun.code == 2);
    CHECK(dagRun.err.find("use `solve`") != std::string::npos);
}

TEST_CASE("decide --algo forces a decider and rejects bad pairings") {
    const std::string d1AsRooks = writeTemp("force_rooks.board",
                                            "solo-chess v1 d=1\n"
                                            "R 1 1 1\n"
                                            "R 1 2 0\n");
    // Auto-selection would pick rooks1d (all rooks on the x=1 file); --algo d1
    // forces the budget-one decider instead.
    const auto forced = cli({"decide", d1AsRooks, "--algo", "d1"});
    CHECK(forced.code == 0);
    CHECK(lines(forced.out)[1] == "algorithm: d1");

    const std::string offFile = writeTemp("force_bad.board",
                                          "solo-chess v1 d=2\n"
                                          "R 2 1 1\n"
                                          "R 2 2 1\n");
    CHECK(cli({"decide", offFile, "--algo", "rooks1d"}).code == 2);
    CHECK(cli({"decide", offFile, "--algo", "tree"}).code == 2);
    CHECK(cli({"decide", offFile, "--algo", "nonesuch"}).code == 2);

    const std::string tree = writeTemp("force_tree.graph",
                                       "capture-graph v1 directed=0 d=2\n"
                                       "v 0 2\nv 1 2\n"
                                       "e 0 1\n");
    CHECK(cli({"decide", tree, "--algo", "pawns"}).code == 2);
    const auto charForced = cli({"decide", tree, "--algo", "characterization"});
    CHECK(charForced.code == 0);
    CHECK(lines(charForced.out)[1] == "algorithm: characterization");

    // A disconnected forest is acyclic, and unsolvable by the tree path.
    const std::string forest = writeTemp("force_forest.graph",
                                         "capture-graph v1 directed=0 d=2\n"
                                         "v 0 2\nv 1 2\nv 2 2\nv 3 2\n"
                                         "e 0 1\ne 2 3\n");
    const auto forestRun = cli({"decide", forest});
    CHECK(forestRun.code == 1);
    CHECK(forestRun.out ==
          "UNSOLVABLE\n"
          "algorithm: tree\n"
          "reason: disconnected: captures cannot merge components\n");
}

// ---------------------------------------------------------------------------
// CLI: solve and verify
// ---------------------------------------------------------------------------

TEST_CASE("solve reports board verdicts and writes witnesses") {
    const std::string board = writeTemp("solve_two.board",
                                        "solo-chess v1 d=2\n"
                                        "R 1 1 1\n"
                                        "R 1 2 1\n");
    const std::string witnessPath = (tempDir() / "solve_two_witness.txt").string();
    const auto run = cli({"solve", board, "--witness", witnessPath});
    CHECK(run.code == 0);
    const auto outLines = lines(run.out);
    REQUIRE(outLines.size() == 3);
    CHECK(outLines[0] == "SOLVABLE");
    CHECK(outLines[1] == "final square: 1,2");
    CHECK(outLines[2].rfind("states explored: ", 0) == 0);
    CHECK(readBack(witnessPath) == "1,1 -> 1,2\n");

    const auto verify = cli({"verify", board, "--witness", witnessPath});
    CHECK(verify.code == 0);
    CHECK(verify.out ==
          "OK\n"
          "final square: 1,2\n"
          "final budget: 0\n");

    // Tampered witness: replay fails with the offending move index.
    const std::string tampered = writeTemp("solve_two_bad.txt", "1,2 -> 5,5\n");
    const auto bad = cli({"verify", board, "--witness", tampered});
    CHECK(bad.code == 1);
    CHECK(lines(bad.out)[0] == "FAIL");

    // Target pinning: requiring the other square changes the witness.
    const auto targeted = cli({"solve", board, "--target", "1,1"});
    CHECK(targeted.code == 0);
    CHECK(lines(targeted.out)[1] == "final square: 1,1");
    const auto impossible = cli({"solve", board, "--target", "1,1", "--leftover", "1"});
    CHECK(impossible.code == 1);
    CHECK(lines(impossible.out)[0] == "UNSOLVABLE");
}

TEST_CASE("solve handles graph instances and JSON output") {
    const std::string path3 = writeTemp("solve_path3.graph",
                                        "capture-graph v1 directed=0 d=2\n"
                                        "v 0 2\nv 1 2\nv 2 2\n"
                                        "e 0 1\ne 1 2\n");
    const std::string witnessPath = (tempDir() / "solve_path3_witness.txt").string();
    const auto run = cli({"solve", path3, "--witness", witnessPath});
    CHECK(run.code == 0);
    CHECK(lines(run.out)[0] == "SOLVABLE");
    const auto verify = cli({"verify", path3, "--witness", witnessPath, "--json"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("\"ok\": true") != std::string::npos);
    CHECK(verify.out.find("\"usedEdgesFormSpanningTree\": true") != std::string::npos);

    const auto jsonRun = cli({"solve", path3, "--json"});
    CHECK(jsonRun.code == 0);
    CHECK(jsonRun.out.find("\"command\": \"solve\"") != std::string::npos);
    CHECK(jsonRun.out.find("\"solvable\": true") != std::string::npos);

    const std::string lonePair = writeTemp("solve_pair.graph",
                                           "capture-graph v1 directed=0 d=2\n"
                                           "v 0 0\nv 1 0\n"
                                           "e 0 1\n");
    CHECK(cli({"solve", lonePair}).code == 1);
}

// ---------------------------------------------------------------------------
// CLI: reduce
// ---------------------------------------------------------------------------

TEST_CASE("reduce rbds-to-rooks emits the compiled board and embeds witnesses") {
    const std::string rbds = writeTemp("reduce_rbds.txt",
                                       "rbds v1 n=1 m=1 k=1\n"
                                       "edge 1 1\n");
    const auto run = cli({"reduce", "rbds-to-rooks", rbds});
    CHECK(run.code == 0);
    CHECK(run.out ==
          "solo-chess v1 d=2\n"
          "R 1 1 1\n"
          "R 3 1 1\n"
          "R 1 2 2\n"
          "R 3 3 2\n"
          "R 3 4 1\n");

    const std::string boardPath = (tempDir() / "reduce_rbds.board").string();
    const std::string witnessPath = (tempDir() / "reduce_rbds_witness.txt").string();
    const auto embed = cli({"reduce", "rbds-to-rooks", rbds, "--embed-witness", "--witness",
                            witnessPath, "--out", boardPath});
    CHECK(embed.code == 0);
    CHECK(embed.out.empty());
    const auto verify = cli({"verify", boardPath, "--witness", witnessPath});
    CHECK(verify.code == 0);
    CHECK(verify.out ==
          "OK\n"
          "final square: 3,4\n"
          "final budget: 0\n");

    // Undominated source: the board is still compiled, but nothing embeds.
    const std::string empty = writeTemp("reduce_rbds_empty.txt", "rbds v1 n=1 m=1 k=1\n");
    const auto unsat = cli({"reduce", "rbds-to-rooks", empty, "--embed-witness", "--witness",
                            (tempDir() / "unused_witness.txt").string()});
    CHECK(unsat.code == 1);
    CHECK(unsat.err.find("no witness embedded") != std::string::npos);
    CHECK(lines(unsat.out)[0] == "solo-chess v1 d=2");

    const auto jsonRun = cli({"reduce", "rbds-to-rooks", rbds, "--json"});
    CHECK(jsonRun.code == 0);
    CHECK(jsonRun.out.find("\"targetSquare\": \"3,4\"") != std::string::npos);
    CHECK(jsonRun.out.find("\"provenance\"") != std::string::npos);
    CHECK(jsonRun.out.find("\"red 1\"") != std::string::npos);
}

TEST_CASE("reduce sat-to-dag compiles DIMACS input") {
    const std::string cnf = writeTemp("reduce_sat.cnf", "p cnf 1 1\n1 0\n");
    const auto run = cli({"reduce", "sat-to-dag", cnf});
    CHECK(run.code == 0);
    CHECK(run.out ==
          "capture-graph v1 directed=1 d=2\n"
          "v 0 2\n"
          "v 1 2\n"
          "v 2 2\n"
          "v 3 2\n"
          "v 4 2\n"
          "e 0 1\n"
          "e 1 3\n"
          "e 2 3\n"
          "e 3 4\n");

    const std::string dagPath = (tempDir() / "reduce_sat.graph").string();
    const std::string witnessPath = (tempDir() / "reduce_sat_witness.txt").string();
    const auto embed = cli({"reduce", "sat-to-dag", cnf, "--embed-witness", "--witness",
                            witnessPath, "--out", dagPath});
    CHECK(embed.code == 0);
    const auto verify = cli({"verify", dagPath, "--witness", witnessPath});
    CHECK(verify.code == 0);
    CHECK(lines(verify.out)[1] == "final vertex: 4");

    // Unsatisfiable source: instance still compiles, exit signals no witness.
    const std::string unsat = writeTemp("reduce_unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    const auto unsatRun = cli({"reduce", "sat-to-dag", unsat, "--embed-witness", "--witness",
                               (tempDir() / "unused2.txt").string()});
    CHECK(unsatRun.code == 1);
}

TEST_CASE("reduce colorful-to-graph compiles the gadget and its witness") {
    const std::string colorful = writeTemp("reduce_colorful.txt",
                                           "rbds v1 n=1 m=1 k=1\n"
                                           "edge 1 1\n"
                                           "class 1 1\n");
    const auto run = cli({"reduce", "colorful-to-graph", colorful});
    CHECK(run.code == 0);
    const ColorfulRBDSInstance inst{{1, 1, 1, {{1, 1}}}, {1}};
    CHECK(run.out == emitCaptureGraph(*colorfulRbdsToGraph(inst).graph));

    const std::string graphPath = (tempDir() / "reduce_colorful.graph").string();
    const std::string witnessPath = (tempDir() / "reduce_colorful_witness.txt").string();
    const auto embed = cli({"reduce", "colorful-to-graph", colorful, "--embed-witness",
                            "--witness", witnessPath, "--out", graphPath});
    CHECK(embed.code == 0);
    const auto verify = cli({"verify", graphPath, "--witness", witnessPath, "--json"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("\"ok\": true") != std::string::npos);
    CHECK(verify.out.find("\"usedEdgesFormSpanningTree\": true") != std::string::npos);

    // Plain rbds input lacks the class partition.
    const std::string plain = writeTemp("reduce_plain.txt", "rbds v1 n=1 m=1 k=1\nedge 1 1\n");
    CHECK(cli({"reduce", "colorful-to-graph", plain}).code == 2);
}

TEST_CASE("reduce queen transforms rewrite boards") {
    const std::string rooks = writeTemp("reduce_rtq.board",
                                        "solo-chess v1 d=2\n"
                                        "R 1 1 1\n"
                                        "R 3 1 1\n");
    const auto spaced = cli({"reduce", "rooks-to-queens", rooks});
    CHECK(spaced.code == 0);
    // Default spacing is the squared piece count: x' = x * (2^2 + 1).
    CHECK(spaced.out ==
          "solo-chess v1 d=2\n"
          "Q 5 1 1\n"
          "Q 15 1 1\n");
    const auto tight = cli({"reduce", "rooks-to-queens", rooks, "--spacing", "1"});
    CHECK(tight.out ==
          "solo-chess v1 d=2\n"
          "Q 2 1 1\n"
          "Q 6 1 1\n");

    const std::string queens = writeTemp("reduce_uq.board",
                                         "solo-chess v1 d=2\n"
                                         "Q 10 1 1\n");
    const auto uniform = cli({"reduce", "uniformize-queens", queens});
    CHECK(uniform.code == 0);
    CHECK(uniform.out ==
          "solo-chess v1 d=2\n"
          "Q 10 1 2\n"
          "Q 9 2 2\n");

    // A queen sitting on the partner's north-west diagonal blocks every
    // support offset: placement fails with the search-bound error.
    const std::string blocked = writeTemp("reduce_uq_blocked.board",
                                          "solo-chess v1 d=2\n"
                                          "Q 10 1 1\n"
                                          "Q 9 2 2\n");
    const auto blockedRun =
        cli({"reduce", "uniformize-queens", blocked, "--bound", "50"});
    CHECK(blockedRun.code == 4);

    const std::string bishops = writeTemp("reduce_btr.board",
                                          "solo-chess v1 d=1\n"
                                          "B 2 1 1\n"
                                          "B 1 2 0\n");
    const auto rotated = cli({"reduce", "bishops-to-rooks", bishops});
    CHECK(rotated.code == 0);
    CHECK(rotated.out == emitConfiguration(rotateBishopsToRooks(parseConfiguration(
                             readBack(bishops)))));

    const std::string knights = writeTemp("reduce_ktg.board",
                                          "solo-chess v1 d=2\n"
                                          "N 1 1 2\n"
                                          "N 3 1 1\n"
                                          "N 2 3 2\n");
    const auto extracted = cli({"reduce", "knights-to-graph", knights});
    CHECK(extracted.code == 0);
    CHECK(lines(extracted.out)[0] == "capture-graph v1 directed=0 d=2");

    CHECK(cli({"reduce", "nonesuch", rooks}).code == 2);
    CHECK(cli({"reduce", "rooks-to-queens", rooks, "--embed-witness", "--witness",
               (tempDir() / "nope.txt").string()})
              .code == 2);
}

// ---------------------------------------------------------------------------
// CLI: gen and sweep
// ---------------------------------------------------------------------------

TEST_CASE("gen emits reproducible instances to stdout or a file") {
    const auto a = cli({"gen", "rooks1d", "--size", "6", "--seed", "42"});
    const auto b = cli({"gen", "rooks1d", "--size", "6", "--seed", "42"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.size() == 7);

    const std::string outPath = (tempDir() / "gen_tree.graph").string();
    const auto filed = cli({"gen", "trees", "--size", "7", "--seed", "3", "--out", outPath});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    const CaptureGraph g = parseCaptureGraph(readBack(outPath));
    CHECK(g.vertexCount() == 7);
    CHECK(g.edges.size() == 6);

    const auto jsonRun = cli({"gen", "cnf", "--size", "2", "--seed", "1", "--json"});
    CHECK(jsonRun.code == 0);
    CHECK(jsonRun.out.find("\"command\": \"gen\"") != std::string::npos);
    CHECK(jsonRun.out.find("\"family\": \"cnf\"") != std::string::npos);

    CHECK(cli({"gen", "nonesuch"}).code == 2);
}

TEST_CASE("sweep reports clean cross-validation and exits nonzero on mismatch only") {
    const auto run =
        cli({"sweep", "rooks1d", "--exhaustive", "--max-len", "4", "--serial"});
    CHECK(run.code == 0);
    CHECK(run.out ==
          "family: rooks1d\n"
          "instances: 340\n"
          "overflows: 0\n"
          "mismatches: 0\n");

    const auto jsonRun =
        cli({"sweep", "rooks1d", "--exhaustive", "--max-len", "4", "--json"});
    CHECK(jsonRun.code == 0);
    CHECK(jsonRun.out ==
          "{\n"
          "  \"command\": \"sweep\",\n"
          "  \"family\": \"rooks1d\",\n"
          "  \"instances\": 340,\n"
          "  \"mismatches\": 0,\n"
          "  \"overflows\": 0,\n"
          "  \"reports\": []\n"
          "}\n");

    // Parallel and serial sweeps print identical bytes.
    const auto serial = cli({"sweep", "d1", "--samples", "20", "--seed", "9", "--serial"});
    const auto parallel = cli({"sweep", "d1", "--samples", "20", "--seed", "9"});
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);

    CHECK(cli({"sweep", "nonesuch"}).code == 2);
    CHECK(cli({"sweep", "pawns", "--exhaustive"}).code == 2);
}

// ---------------------------------------------------------------------------
// CLI: exit codes and usage errors
// ---------------------------------------------------------------------------

TEST_CASE("exit codes distinguish usage, parse and overflow failures") {
    // Usage: no subcommand, unknown subcommand, unknown flags.
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"solve"}).code == 2);
    CHECK(cli({"decide", "--rooks1d", "01", "--algo", "pawns"}).code == 2);

    // Help succeeds.
    const auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);

    // Parse errors carry line/column and exit 3.
    const std::string junk = writeTemp("exit_junk.board", "junk\n");
    const auto parse = cli({"solve", junk});
    CHECK(parse.code == 3);
    CHECK(parse.err.find("parse error at line 1, column 1") != std::string::npos);

    const std::string overBudget =
        writeTemp("exit_budget.board", "solo-chess v1 d=1\nR 1 1 2\n");
    const auto budget = cli({"solve", overBudget});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("line 2, column 7") != std::string::npos);

    // Witness parse errors also exit 3.
    const std::string board = writeTemp("exit_board.board",
                                        "solo-chess v1 d=2\nR 1 1 1\nR 1 2 1\n");
    const std::string badWitness = writeTemp("exit_witness.txt", "nonsense\n");
    CHECK(cli({"verify", board, "--witness", badWitness}).code == 3);

    // Oracle overflow exits 4.
    const std::string wide = writeTemp("exit_wide.board", []() {
        std::string text = "solo-chess v1 d=2\n";
        for (int y = 1; y <= 10; ++y) text += "R 1 " + std::to_string(y) + " 2\n";
        return text;
    }());
    const auto overflow = cli({"solve", wide, "--cap", "1"});
    CHECK(overflow.code == 4);
    CHECK(overflow.err.find("state cap") != std::string::npos);

    // Missing file is a usage-level failure.
    CHECK(cli({"solve", (tempDir() / "does_not_exist.board").string()}).code == 2);
}
