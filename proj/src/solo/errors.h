#pragma once

#include <stdexcept>
#include <string>

namespace solo {

// Base class for all typed errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A capture move violated legality; carries the failure category.
struct IllegalMove : Error {
    enum class Reason { EmptyFrom, EmptyTo, ZeroBudget, BlockedLine, Geometry };
    Reason reason;
    IllegalMove(Reason r, const std::string& what) : Error(what), reason(r) {}
};

// The exhaustive search visited more states than its configured cap.
struct SearchBudgetExceeded : Error {
    unsigned long long statesExplored;
    explicit SearchBudgetExceeded(unsigned long long n)
        : Error("search state cap exceeded after " + std::to_string(n) + " states"),
          statesExplored(n) {}
};

struct NonBishopPiece : Error {
    using Error::Error;
};

struct BudgetTooLarge : Error {
    using Error::Error;
};

struct MaxBudgetMismatch : Error {
    using Error::Error;
};

struct NotSolvableAt : Error {
    using Error::Error;
};

struct BudgetNotTwo : Error {
    using Error::Error;
};

struct NotSolvable : Error {
    using Error::Error;
};

struct MalformedInstance : Error {
    using Error::Error;
};

struct InvalidDominatingSet : Error {
    using Error::Error;
};

struct PlacementOverflow : Error {
    using Error::Error;
};

struct UnsupportedFamily : Error {
    using Error::Error;
};

// Instance-file parse failure with a 1-based location.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int ln, int col, const std::string& what)
        : Error("parse error at line " + std::to_string(ln) + ", column " +
                std::to_string(col) + ": " + what),
          line(ln), column(col) {}
};

}  // namespace solo
