// Error types shared across the library. Operations that require strict
// positivity or interior points throw instead of clamping: clamped inputs
// would silently corrupt the fixed-point arithmetic downstream.
#pragma once

#include <stdexcept>
#include <string>

namespace dgf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (nonpositive entry where
// positivity is required, boundary point where an interior one is needed,
// mismatched dimensions, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structural property of an interaction matrix that failed validation,
// in check order.
enum class MatrixDefect {
  NonSquare,
  DimensionTooSmall,
  NegativeEntry,
  RowSumViolation,
  NonzeroDiagonal,
  NotIrreducible,
};

const char* to_string(MatrixDefect defect);

class ValidationError : public Error {
 public:
  ValidationError(MatrixDefect defect, const std::string& what, int row = -1,
                  int col = -1)
      : Error(what), defect_(defect), row_(row), col_(col) {}

  MatrixDefect defect() const { return defect_; }
  // 0-based indices; -1 when not applicable. Messages render them 1-based.
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  MatrixDefect defect_;
  int row_;
  int col_;
};

// An exp() argument guard tripped; continuing would overflow to infinity
// inside a normalization.
class NumericRangeError : public Error {
 public:
  using Error::Error;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, long iterations, double residual)
      : Error(what), iterations_(iterations), residual_(residual) {}

  long iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  long iterations_;
  double residual_;
};

// The fixed-point iteration ran into a simplex vertex; this is the
// star-topology regime, not a numerical failure.
class ConvergedToVertex : public Error {
 public:
  ConvergedToVertex(const std::string& what, int vertex)
      : Error(what), vertex_(vertex) {}

  // 0-based index of the dominant coordinate.
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

}  // namespace dgf
