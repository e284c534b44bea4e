#pragma once

#include <stdexcept>
#include <string>

namespace ridge {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violations of an operation's numeric precondition (bad lambda, wrong
// space, rank deficiency, ...). The CLI maps these to exit code 3.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or unusable input files / arguments. CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A query returned no result (empty equivalence class, ...). CLI exit 4.
class EmptyResult : public Error {
 public:
  using Error::Error;
};

struct RankDeficient : DomainError {
  explicit RankDeficient(const std::string& msg) : DomainError("RankDeficient: " + msg) {}
};

struct ShapeMismatch : DomainError {
  explicit ShapeMismatch(const std::string& msg) : DomainError("ShapeMismatch: " + msg) {}
};

struct NotPositiveDefinite : DomainError {
  explicit NotPositiveDefinite(const std::string& msg)
      : DomainError("NotPositiveDefinite: " + msg) {}
};

struct LambdaOutOfDomain : DomainError {
  explicit LambdaOutOfDomain(const std::string& msg)
      : DomainError("LambdaOutOfDomain: " + msg) {}
};

struct NegativeLambda : DomainError {
  explicit NegativeLambda(const std::string& msg) : DomainError("NegativeLambda: " + msg) {}
};

struct SpaceMismatch : DomainError {
  explicit SpaceMismatch(const std::string& msg) : DomainError("SpaceMismatch: " + msg) {}
};

struct ConstantColumn : DomainError {
  explicit ConstantColumn(int column)
      : DomainError("ConstantColumn: predictor column " + std::to_string(column) +
                    " is constant; centering would zero it") {}
};

struct DegenerateDenominator : DomainError {
  explicit DegenerateDenominator(const std::string& msg)
      : DomainError("DegenerateDenominator: " + msg) {}
};

struct NoSignChange : DomainError {
  explicit NoSignChange(const std::string& msg) : DomainError("NoSignChange: " + msg) {}
};

struct DegenerateScenario : DomainError {
  explicit DegenerateScenario(const std::string& msg)
      : DomainError("DegenerateScenario: " + msg) {}
};

struct ParseError : InputError {
  ParseError(int row, int col, const std::string& msg)
      : InputError("ParseError at row " + std::to_string(row) + ", column " +
                   std::to_string(col) + ": " + msg),
        row(row),
        col(col) {}
  int row;
  int col;
};

struct TooFewRows : InputError {
  TooFewRows(long rows, long needed)
      : InputError("TooFewRows: " + std::to_string(rows) + " data rows, need at least " +
                   std::to_string(needed)) {}
};

struct EmptyGrid : InputError {
  explicit EmptyGrid(const std::string& msg) : InputError("EmptyGrid: " + msg) {}
};

struct EmptyClass : EmptyResult {
  explicit EmptyClass(const std::string& msg) : EmptyResult("EmptyClass: " + msg) {}
};

}  // namespace ridge
