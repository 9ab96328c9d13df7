// Interaction-matrix validation, digraph topology analysis, and the
// Perron-Frobenius left eigenvector (eigenvector centrality).
#pragma once

#include <optional>
#include <vector>

#include "dgf/simplex.hpp"

namespace dgf {

// Dense row-major matrix as read from a file or assembled by a caller.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // rows * cols entries, row-major

  double at(int i, int j) const {
    return values[static_cast<size_t>(i) * static_cast<size_t>(cols) +
                  static_cast<size_t>(j)];
  }
};

// Row-stochastic, zero-diagonal, irreducible matrix. Only obtainable through
// validate_interaction_matrix, so holding one certifies all three properties.
class InteractionMatrix {
 public:
  int dim() const { return n_; }
  double at(int i, int j) const {
    return a_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
              static_cast<size_t>(j)];
  }
  const std::vector<double>& values() const { return a_; }

 private:
  InteractionMatrix(int n, std::vector<double> values)
      : n_(n), a_(std::move(values)) {}
  friend InteractionMatrix validate_interaction_matrix(const DenseMatrix&);

  int n_;
  std::vector<double> a_;
};

// Checks, in order: squareness, n >= 3, nonnegativity, unit row sums (within
// kSumTol), exactly-zero diagonal, irreducibility. Throws ValidationError
// naming the first violated property.
InteractionMatrix validate_interaction_matrix(const DenseMatrix& raw);

// True iff the digraph of off-diagonal positive entries is strongly
// connected. Checked with forward and reverse reachability from node 0.
bool is_irreducible(const DenseMatrix& m);

struct TopologyReport {
  bool irreducible = false;
  // Node touching every edge of the digraph, when one exists (0-based).
  std::optional<int> star_center;
};

// Scans all edges against each candidate center; smallest index wins if
// several qualify (only possible for degenerate tiny edge sets).
TopologyReport star_topology(const InteractionMatrix& C);

// Eigenvector centrality scores: interior simplex vector c with c'C = c'.
// Scores never exceed 1/2; the bound is attained only by star centers.
class CentralityVector {
 public:
  explicit CentralityVector(std::vector<double> scores, double residual = 0.0);

  int dim() const { return static_cast<int>(c_.size()); }
  const std::vector<double>& scores() const { return c_; }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  // Achieved ||c'C - c'||_inf when computed from a matrix; 0 for directly
  // constructed vectors.
  double residual() const { return residual_; }

 private:
  std::vector<double> c_;
  double residual_;
};

// Power iteration on the transpose of the damped matrix (C + I)/2, which is
// primitive even when C is periodic (e.g. a directed cycle) and has the same
// left eigenvector. Starts from the uniform vector; renormalizes to unit sum
// each step; converges when ||c'C - c'||_inf <= tol.
CentralityVector perron_left_eigenvector(const InteractionMatrix& C,
                                         double tol = 1e-14,
                                         long max_iter = 100000);

}  // namespace dgf
