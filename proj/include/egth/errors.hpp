#pragma once

#include <stdexcept>
#include <string>

#include "egth/types.hpp"

namespace egth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input data: rejected before any algorithm runs.
struct ValidationError : Error {
    using Error::Error;
};

/// The input violated an algorithmic precondition (reducibility, singular
/// pivot) that is only detectable while the computation runs.
struct AlgorithmError : Error {
    using Error::Error;
};

struct NotSquare : ValidationError {
    NotSquare(Index rows, Index cols)
        : ValidationError("matrix is not square (" + std::to_string(rows) + "x" +
                          std::to_string(cols) + ")"),
          rows(rows), cols(cols) {}
    Index rows, cols;
};

struct NegativeEntry : ValidationError {
    NegativeEntry(Index row, Index col)  // 1-based state labels
        : ValidationError("negative entry at (" + std::to_string(row) + "," +
                          std::to_string(col) + ")"),
          row(row), col(col) {}
    Index row, col;
};

struct RowSumOutOfTolerance : ValidationError {
    RowSumOutOfTolerance(Index row, double sum)
        : ValidationError("row " + std::to_string(row) + " sums to " +
                          std::to_string(sum) + ", not 1"),
          row(row), sum(sum) {}
    Index row;
    double sum;
};

struct DimensionMismatch : ValidationError {
    explicit DimensionMismatch(const std::string& what)
        : ValidationError("dimension mismatch: " + what) {}
};

struct ParseError : ValidationError {
    ParseError(Index line, const std::string& reason)
        : ValidationError("parse error at line " + std::to_string(line) + ": " + reason),
          line(line), reason(reason) {}
    Index line;
    std::string reason;
};

struct UnknownProblem : ValidationError {
    explicit UnknownProblem(const std::string& id)
        : ValidationError("unknown test problem '" + id + "'"), id(id) {}
    std::string id;
};

/// S(n) = 0 at some reduction level: the last state of the censored chain
/// cannot be left, so the chain is reducible.
struct AbsorbingLastState : AlgorithmError {
    explicit AbsorbingLastState(Index level)
        : AlgorithmError("state " + std::to_string(level) +
                         " is absorbing at reduction level " + std::to_string(level) +
                         " (chain is reducible)"),
          level(level) {}
    Index level;
};

struct SingularPivot : AlgorithmError {
    explicit SingularPivot(Index t)
        : AlgorithmError("nonpositive pivot 1 - q_tt at elimination step t = " +
                         std::to_string(t)),
          t(t) {}
    Index t;
};

struct MultipleClosedClasses : AlgorithmError {
    explicit MultipleClosedClasses(Index count)
        : AlgorithmError("chain has " + std::to_string(count) +
                         " closed communicating classes, expected exactly one"),
          count(count) {}
    Index count;
};

struct Reducible : AlgorithmError {
    explicit Reducible(const std::string& what) : AlgorithmError("reducible chain: " + what) {}
};

}  // namespace egth
