#include "solo/formats.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <utility>

namespace solo {
namespace {

struct Token {
    std::string text;
    int column = 1;
};

// Lines split on '\n', tolerating a trailing '\r' (CRLF input).
std::vector<std::string> splitLines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    for (auto& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();
    return lines;
}

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

[[noreturn]] void fail(int line, int column, const std::string& what) {
    throw ParseError(line, column, what);
}

long long parseIntAt(const std::string& text, int line, int column, long long lo,
                     long long hi, const std::string& what) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        fail(line, column, "expected " + what + ", found '" + text + "'");
    if (value < lo || value > hi)
        fail(line, column,
             what + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                 "]: '" + text + "'");
    return value;
}

int parseInt(const Token& t, int line, long long lo, long long hi, const std::string& what) {
    return static_cast<int>(parseIntAt(t.text, line, t.column, lo, hi, what));
}

// Parses a "<key>=<int>" token such as "d=2" or "directed=1".
int parseKeyInt(const Token& t, int line, const std::string& key, long long lo, long long hi) {
    const std::string prefix = key + "=";
    if (t.text.rfind(prefix, 0) != 0)
        fail(line, t.column, "expected '" + prefix + "<value>', found '" + t.text + "'");
    return static_cast<int>(parseIntAt(t.text.substr(prefix.size()), line,
                                       t.column + static_cast<int>(prefix.size()), lo, hi,
                                       "value of '" + key + "'"));
}

void expectTokenCount(const std::vector<Token>& tokens, std::size_t count, int line,
                      const std::string& shape) {
    if (tokens.size() == count) return;
    int column = tokens.size() > count ? tokens[count].column
                                       : tokens.back().column +
                                             static_cast<int>(tokens.back().text.size());
    fail(line, column, "expected '" + shape + "'");
}

constexpr long long kMaxCoordinate = 1'000'000'000;

// Parses "<x>,<y>" with both coordinates >= 1.
Square parseSquareToken(const Token& t, int line) {
    auto comma = t.text.find(',');
    if (comma == std::string::npos)
        fail(line, t.column, "expected square '<x>,<y>', found '" + t.text + "'");
    Square sq;
    sq.x = static_cast<int>(parseIntAt(t.text.substr(0, comma), line, t.column, 1,
                                       kMaxCoordinate, "x coordinate"));
    sq.y = static_cast<int>(parseIntAt(t.text.substr(comma + 1), line,
                                       t.column + static_cast<int>(comma) + 1, 1,
                                       kMaxCoordinate, "y coordinate"));
    return sq;
}

}  // namespace

std::string emitConfiguration(const Configuration& config) {
    Configuration canon = config.normalized();
    std::string out = "solo-chess v1 d=" + std::to_string(canon.maxBudget) + "\n";
    for (const auto& piece : canon.pieces) {
        out += kindLetter(piece.kind);
        out += ' ' + std::to_string(piece.square.x) + ' ' + std::to_string(piece.square.y) +
               ' ' + std::to_string(piece.budget) + '\n';
    }
    return out;
}

Configuration parseConfiguration(const std::string& text) {
    const auto lines = splitLines(text);
    Configuration config;
    bool headerSeen = false;
    std::set<Square> seen;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line = static_cast<int>(li) + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (!headerSeen) {
            if (tokens[0].text != "solo-chess")
                fail(line, tokens[0].column, "expected header 'solo-chess v1 d=<d>'");
            expectTokenCount(tokens, 3, line, "solo-chess v1 d=<d>");
            if (tokens[1].text != "v1")
                fail(line, tokens[1].column, "expected version 'v1', found '" + tokens[1].text + "'");
            config.maxBudget = parseKeyInt(tokens[2], line, "d", 0, kMaxCoordinate);
            headerSeen = true;
            continue;
        }
        expectTokenCount(tokens, 4, line, "<kind-letter> <x> <y> <budget>");
        std::optional<PieceKind> kind;
        if (tokens[0].text.size() == 1) kind = kindFromLetter(tokens[0].text[0]);
        if (!kind)
            fail(line, tokens[0].column,
                 "expected piece kind letter (one of R, Q, B, N, P), found '" + tokens[0].text + "'");
        PlacedPiece piece;
        piece.kind = *kind;
        piece.square.x = parseInt(tokens[1], line, 1, kMaxCoordinate, "x coordinate");
        piece.square.y = parseInt(tokens[2], line, 1, kMaxCoordinate, "y coordinate");
        piece.budget = parseInt(tokens[3], line, 0, kMaxCoordinate, "budget");
        if (piece.budget > config.maxBudget)
            fail(line, tokens[3].column,
                 "budget " + std::to_string(piece.budget) + " exceeds declared maximum d=" +
                     std::to_string(config.maxBudget));
        if (!seen.insert(piece.square).second)
            fail(line, tokens[1].column, "duplicate square " + to_string(piece.square));
        config.pieces.push_back(piece);
    }
    if (!headerSeen) fail(1, 1, "expected header 'solo-chess v1 d=<d>'");
    Configuration canon = config.normalized();
    canon.validate();
    return canon;
}

std::string emitCaptureGraph(const CaptureGraph& g) {
    std::string out = "capture-graph v1 directed=" + std::to_string(g.directed ? 1 : 0) +
                      " d=" + std::to_string(g.maxBudget) + "\n";
    for (int v = 0; v < g.vertexCount(); ++v)
        out += "v " + std::to_string(v) + ' ' +
               std::to_string(g.budgets[static_cast<std::size_t>(v)]) + '\n';
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges)
        out += "e " + std::to_string(a) + ' ' + std::to_string(b) + '\n';
    return out;
}

CaptureGraph parseCaptureGraph(const std::string& text) {
    const auto lines = splitLines(text);
    CaptureGraph g;
    bool headerSeen = false;
    bool edgesStarted = false;
    std::set<std::pair<int, int>> seenEdges;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line = static_cast<int>(li) + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (!headerSeen) {
            if (tokens[0].text != "capture-graph")
                fail(line, tokens[0].column,
                     "expected header 'capture-graph v1 directed=<0|1> d=<d>'");
            expectTokenCount(tokens, 4, line, "capture-graph v1 directed=<0|1> d=<d>");
            if (tokens[1].text != "v1")
                fail(line, tokens[1].column, "expected version 'v1', found '" + tokens[1].text + "'");
            g.directed = parseKeyInt(tokens[2], line, "directed", 0, 1) == 1;
            g.maxBudget = parseKeyInt(tokens[3], line, "d", 0, kMaxCoordinate);
            headerSeen = true;
            continue;
        }
        if (tokens[0].text == "v") {
            if (edgesStarted)
                fail(line, tokens[0].column, "vertex line after edge lines");
            expectTokenCount(tokens, 3, line, "v <id> <budget>");
            const int expectedId = g.vertexCount();
            const int id = parseInt(tokens[1], line, 0, kMaxCoordinate, "vertex id");
            if (id != expectedId)
                fail(line, tokens[1].column,
                     "expected vertex id " + std::to_string(expectedId) + " (ids must be consecutive from 0)");
            const int budget = parseInt(tokens[2], line, 0, kMaxCoordinate, "budget");
            if (budget > g.maxBudget)
                fail(line, tokens[2].column,
                     "budget " + std::to_string(budget) + " exceeds declared maximum d=" +
                         std::to_string(g.maxBudget));
            g.budgets.push_back(budget);
            continue;
        }
        if (tokens[0].text == "e") {
            edgesStarted = true;
            expectTokenCount(tokens, 3, line, "e <id1> <id2>");
            const int bound = g.vertexCount() - 1;
            int a = parseInt(tokens[1], line, 0, bound, "vertex id");
            int b = parseInt(tokens[2], line, 0, bound, "vertex id");
            if (a == b) fail(line, tokens[1].column, "self-loop on vertex " + std::to_string(a));
            std::pair<int, int> edge{a, b};
            if (!g.directed) edge = std::minmax(a, b);
            if (!seenEdges.insert(edge).second)
                fail(line, tokens[1].column,
                     "duplicate edge (" + std::to_string(edge.first) + ", " +
                         std::to_string(edge.second) + ")");
            g.edges.push_back(edge);
            continue;
        }
        fail(line, tokens[0].column, "expected a 'v' or 'e' line, found '" + tokens[0].text + "'");
    }
    if (!headerSeen) fail(1, 1, "expected header 'capture-graph v1 directed=<0|1> d=<d>'");
    g.validate();
    return g;
}

std::string emitCaptureSequence(const CaptureSequence& seq) {
    std::string out;
    for (const auto& move : seq) out += to_string(move) + '\n';
    return out;
}

CaptureSequence parseCaptureSequence(const std::string& text) {
    const auto lines = splitLines(text);
    CaptureSequence seq;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line = static_cast<int>(li) + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        expectTokenCount(tokens, 3, line, "<x1>,<y1> -> <x2>,<y2>");
        CaptureMove move;
        move.from = parseSquareToken(tokens[0], line);
        if (tokens[1].text != "->")
            fail(line, tokens[1].column, "expected '->', found '" + tokens[1].text + "'");
        move.to = parseSquareToken(tokens[2], line);
        seq.push_back(move);
    }
    return seq;
}

std::string emitGraphSequence(const GraphCaptureSequence& seq) {
    std::string out;
    for (const auto& move : seq) out += to_string(move) + '\n';
    return out;
}

GraphCaptureSequence parseGraphSequence(const std::string& text) {
    const auto lines = splitLines(text);
    GraphCaptureSequence seq;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line = static_cast<int>(li) + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        expectTokenCount(tokens, 3, line, "<from> -> <to>");
        GraphMove move;
        move.from = parseInt(tokens[0], line, 0, kMaxCoordinate, "vertex id");
        if (tokens[1].text != "->")
            fail(line, tokens[1].column, "expected '->', found '" + tokens[1].text + "'");
        move.to = parseInt(tokens[2], line, 0, kMaxCoordinate, "vertex id");
        seq.push_back(move);
    }
    return seq;
}

ColorfulRBDSInstance ParsedRbds::colorful() const {
    if (!classOf)
        throw MalformedInstance("instance carries no class lines; colorful variant unavailable");
    ColorfulRBDSInstance inst{base, *classOf};
    inst.validate();
    return inst;
}

namespace {

std::string rbdsHeader(const RBDSInstance& inst) {
    return "rbds v1 n=" + std::to_string(inst.redCount) + " m=" +
           std::to_string(inst.blueCount) + " k=" + std::to_string(inst.k) + "\n";
}

std::string rbdsEdgeLines(const RBDSInstance& inst) {
    auto edges = inst.edges;
    std::sort(edges.begin(), edges.end());
    std::string out;
    for (const auto& [red, blue] : edges)
        out += "edge " + std::to_string(red) + ' ' + std::to_string(blue) + '\n';
    return out;
}

}  // namespace

std::string emitRbds(const RBDSInstance& inst) {
    return rbdsHeader(inst) + rbdsEdgeLines(inst);
}

std::string emitColorfulRbds(const ColorfulRBDSInstance& inst) {
    std::string out = rbdsHeader(inst.base) + rbdsEdgeLines(inst.base);
    for (int red = 1; red <= inst.base.redCount; ++red)
        out += "class " + std::to_string(red) + ' ' +
               std::to_string(inst.classOf[static_cast<std::size_t>(red - 1)]) + '\n';
    return out;
}

ParsedRbds parseRbds(const std::string& text) {
    const auto lines = splitLines(text);
    ParsedRbds parsed;
    RBDSInstance& inst = parsed.base;
    bool headerSeen = false;
    std::set<std::pair<int, int>> seenEdges;
    std::map<int, int> classAssignments;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line = static_cast<int>(li) + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (!headerSeen) {
            if (tokens[0].text != "rbds")
                fail(line, tokens[0].column, "expected header 'rbds v1 n=<n> m=<m> k=<k>'");
            expectTokenCount(tokens, 5, line, "rbds v1 n=<n> m=<m> k=<k>");
            if (tokens[1].text != "v1")
                fail(line, tokens[1].column, "expected version 'v1', found '" + tokens[1].text + "'");
            inst.redCount = parseKeyInt(tokens[2], line, "n", 0, kMaxCoordinate);
            inst.blueCount = parseKeyInt(tokens[3], line, "m", 0, kMaxCoordinate);
            inst.k = parseKeyInt(tokens[4], line, "k", 1, kMaxCoordinate);
            headerSeen = true;
            continue;
        }
        if (tokens[0].text == "edge") {
            expectTokenCount(tokens, 3, line, "edge <red> <blue>");
            const int red = parseInt(tokens[1], line, 1, inst.redCount, "red vertex id");
            const int blue = parseInt(tokens[2], line, 1, inst.blueCount, "blue vertex id");
            if (!seenEdges.insert({red, blue}).second)
                fail(line, tokens[1].column,
                     "duplicate edge (" + std::to_string(red) + ", " + std::to_string(blue) + ")");
            inst.edges.emplace_back(red, blue);
            continue;
        }
        if (tokens[0].text == "class") {
            expectTokenCount(tokens, 3, line, "class <red> <j>");
            const int red = parseInt(tokens[1], line, 1, inst.redCount, "red vertex id");
            const int cls = parseInt(tokens[2], line, 1, inst.k, "class id");
            if (!classAssignments.emplace(red, cls).second)
                fail(line, tokens[1].column,
                     "duplicate class assignment for red vertex " + std::to_string(red));
            continue;
        }
        fail(line, tokens[0].column,
             "expected an 'edge' or 'class' line, found '" + tokens[0].text + "'");
    }
    if (!headerSeen) fail(1, 1, "expected header 'rbds v1 n=<n> m=<m> k=<k>'");
    inst.validate();
    if (!classAssignments.empty()) {
        if (static_cast<int>(classAssignments.size()) != inst.redCount)
            fail(static_cast<int>(lines.size()), 1,
                 "class lines must cover every red vertex (got " +
                     std::to_string(classAssignments.size()) + " of " +
                     std::to_string(inst.redCount) + ")");
        std::vector<int> classOf(static_cast<std::size_t>(inst.redCount));
        for (const auto& [red, cls] : classAssignments)
            classOf[static_cast<std::size_t>(red - 1)] = cls;
        ColorfulRBDSInstance colorful{inst, classOf};
        colorful.validate();
        parsed.classOf = std::move(classOf);
    }
    return parsed;
}

std::string emitDimacs(const CnfFormula& formula) {
    std::string out = "p cnf " + std::to_string(formula.variableCount) + ' ' +
                      std::to_string(formula.clauses.size()) + '\n';
    for (const auto& clause : formula.clauses) {
        for (int literal : clause) out += std::to_string(literal) + ' ';
        out += "0\n";
    }
    return out;
}

CnfFormula parseDimacs(const std::string& text) {
    const auto lines = splitLines(text);
    CnfFormula formula;
    bool problemSeen = false;
    int declaredClauses = 0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line = static_cast<int>(li) + 1;
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (tokens[0].text[0] == 'c') continue;  // comment line
        if (tokens[0].text == "p") {
            if (problemSeen) fail(line, tokens[0].column, "duplicate problem line");
            expectTokenCount(tokens, 4, line, "p cnf <vars> <clauses>");
            if (tokens[1].text != "cnf")
                fail(line, tokens[1].column, "expected 'cnf', found '" + tokens[1].text + "'");
            formula.variableCount = parseInt(tokens[2], line, 0, kMaxCoordinate, "variable count");
            declaredClauses = parseInt(tokens[3], line, 0, kMaxCoordinate, "clause count");
            problemSeen = true;
            continue;
        }
        if (!problemSeen)
            fail(line, tokens[0].column, "expected 'p cnf <vars> <clauses>' before clauses");
        std::vector<int> clause;
        bool terminated = false;
        for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
            const int value = parseInt(tokens[ti], line, -formula.variableCount,
                                       formula.variableCount, "literal");
            if (value == 0) {
                if (ti + 1 != tokens.size())
                    fail(line, tokens[ti + 1].column, "literal after clause terminator 0");
                terminated = true;
                break;
            }
            if (std::find(clause.begin(), clause.end(), value) != clause.end())
                fail(line, tokens[ti].column,
                     "duplicate literal " + std::to_string(value) + " in clause");
            if (clause.size() == 3)
                fail(line, tokens[ti].column, "clause has more than three literals");
            clause.push_back(value);
        }
        if (!terminated) {
            const auto& lastTok = tokens.back();
            fail(line, lastTok.column + static_cast<int>(lastTok.text.size()),
                 "expected clause terminator 0");
        }
        if (clause.empty()) fail(line, tokens[0].column, "empty clause");
        formula.clauses.push_back(std::move(clause));
    }
    if (!problemSeen) fail(1, 1, "expected 'p cnf <vars> <clauses>'");
    if (static_cast<int>(formula.clauses.size()) != declaredClauses)
        fail(static_cast<int>(lines.size()), 1,
             "expected " + std::to_string(declaredClauses) + " clauses, found " +
                 std::to_string(formula.clauses.size()));
    formula.validate();
    return formula;
}

ParsedInstance parseInstance(const std::string& text) {
    const auto lines = splitLines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto tokens = tokenize(lines[li]);
        if (tokens.empty()) continue;
        if (tokens[0].text == "solo-chess") return {parseConfiguration(text), std::nullopt};
        if (tokens[0].text == "capture-graph") return {std::nullopt, parseCaptureGraph(text)};
        fail(static_cast<int>(li) + 1, tokens[0].column,
             "expected a 'solo-chess v1' or 'capture-graph v1' header");
    }
    fail(1, 1, "expected a 'solo-chess v1' or 'capture-graph v1' header");
}

CaptureGraph knightGraphFromBoard(const Configuration& config) {
    const Configuration canon = config.normalized();
    CaptureGraph g;
    g.directed = false;
    g.maxBudget = canon.maxBudget;
    for (const auto& piece : canon.pieces) {
        if (piece.kind != PieceKind::Knight)
            throw MalformedInstance("knight graph extraction requires an all-knight board");
        g.budgets.push_back(piece.budget);
    }
    const int n = g.vertexCount();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (attacksGeometrically(PieceKind::Knight, canon.pieces[static_cast<std::size_t>(i)].square,
                                     canon.pieces[static_cast<std::size_t>(j)].square))
                g.edges.emplace_back(i, j);
    g.validate();
    return g;
}

}  // namespace solo
