#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solo/board.h"
#include "solo/graph.h"
#include "solo/reduction.h"

namespace solo {

// Text formats used by the command-line tools. Every parser is strict and
// reports failures as ParseError with a 1-based line/column and an
// expected-token message; every emitter writes the canonical form (pieces
// sorted by square in (y, x) order, edges sorted ascending), so
// emit(parse(t)) equals t once t itself is canonical. Blank lines are
// ignored everywhere; nothing else is.

// Board files:
//   solo-chess v1 d=<d>
//   <kind-letter> <x> <y> <budget>     (kind letters R, Q, B, N, P)
// Duplicate squares and budgets above the declared d are parse errors.
std::string emitConfiguration(const Configuration& config);
Configuration parseConfiguration(const std::string& text);

// Graph files:
//   capture-graph v1 directed=<0|1> d=<d>
//   v <id> <budget>                    (ids consecutive from 0)
//   e <id1> <id2>                      (all v lines precede all e lines)
std::string emitCaptureGraph(const CaptureGraph& g);
CaptureGraph parseCaptureGraph(const std::string& text);

// Witness files, one move per line.
//   board:  <x1>,<y1> -> <x2>,<y2>
//   graph:  <from> -> <to>
std::string emitCaptureSequence(const CaptureSequence& seq);
CaptureSequence parseCaptureSequence(const std::string& text);
std::string emitGraphSequence(const GraphCaptureSequence& seq);
GraphCaptureSequence parseGraphSequence(const std::string& text);

// Red-blue domination files:
//   rbds v1 n=<n> m=<m> k=<k>
//   edge <red> <blue>
//   class <red> <j>                    (optional; when present, must cover
//                                       every red vertex -> colorful variant)
struct ParsedRbds {
    RBDSInstance base;
    // Present iff the file carried class lines.
    std::optional<std::vector<int>> classOf;

    bool isColorful() const { return classOf.has_value(); }
    // Throws MalformedInstance when no class partition was given.
    ColorfulRBDSInstance colorful() const;
};
std::string emitRbds(const RBDSInstance& inst);
std::string emitColorfulRbds(const ColorfulRBDSInstance& inst);
ParsedRbds parseRbds(const std::string& text);

// CNF formulas in DIMACS form: optional 'c' comment lines, one
// 'p cnf <vars> <clauses>' line, then one zero-terminated clause per line.
std::string emitDimacs(const CnfFormula& formula);
CnfFormula parseDimacs(const std::string& text);

// Either kind of game instance, distinguished by the header line.
struct ParsedInstance {
    std::optional<Configuration> board;
    std::optional<CaptureGraph> graph;
};
ParsedInstance parseInstance(const std::string& text);

// Knights ignore every other piece, so an all-knight board is exactly the
// undirected capture game on the graph whose vertices are the pieces (in
// canonical (y, x) order) and whose edges join mutually attacking knights.
// No claim beyond the exhaustive search is made for these instances.
// Throws MalformedInstance if any piece is not a knight.
CaptureGraph knightGraphFromBoard(const Configuration& config);

}  // namespace solo
