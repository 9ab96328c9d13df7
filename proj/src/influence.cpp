#include "dgf/influence.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace dgf {

const char* to_string(MatrixDefect defect) {
  switch (defect) {
    case MatrixDefect::NonSquare: return "NonSquare";
    case MatrixDefect::DimensionTooSmall: return "DimensionTooSmall";
    case MatrixDefect::NegativeEntry: return "NegativeEntry";
    case MatrixDefect::RowSumViolation: return "RowSumViolation";
    case MatrixDefect::NonzeroDiagonal: return "NonzeroDiagonal";
    case MatrixDefect::NotIrreducible: return "NotIrreducible";
  }
  return "Unknown";
}

namespace {

// Reachability of every node from node 0 along the given edge orientation.
bool all_reachable(const DenseMatrix& m, bool reverse) {
  const int n = m.rows;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (v == u || seen[static_cast<size_t>(v)]) continue;
      const double w = reverse ? m.at(v, u) : m.at(u, v);
      if (w > 0.0) {
        seen[static_cast<size_t>(v)] = 1;
        stack.push_back(v);
        ++count;
      }
    }
  }
  return count == n;
}

}  // namespace

bool is_irreducible(const DenseMatrix& m) {
  if (m.rows != m.cols || m.rows <= 0) {
    throw DomainError("is_irreducible requires a square matrix");
  }
  return all_reachable(m, false) && all_reachable(m, true);
}

InteractionMatrix validate_interaction_matrix(const DenseMatrix& raw) {
  if (raw.rows != raw.cols ||
      raw.values.size() != static_cast<size_t>(raw.rows) * static_cast<size_t>(raw.cols)) {
    throw ValidationError(MatrixDefect::NonSquare, "matrix is not square");
  }
  const int n = raw.rows;
  if (n < 3) {
    throw ValidationError(MatrixDefect::DimensionTooSmall,
                          "dimension must be at least 3, got " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (raw.at(i, j) < 0.0) {
        throw ValidationError(MatrixDefect::NegativeEntry,
                              "negative entry at row " + std::to_string(i + 1) +
                                  ", column " + std::to_string(j + 1),
                              i, j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += raw.at(i, j);
    if (!(std::fabs(s - 1.0) <= kSumTol)) {
      throw ValidationError(MatrixDefect::RowSumViolation,
                            "row " + std::to_string(i + 1) + " sums to " +
                                std::to_string(s) + ", expected 1",
                            i);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (raw.at(i, i) != 0.0) {
      throw ValidationError(MatrixDefect::NonzeroDiagonal,
                            "nonzero diagonal at row " + std::to_string(i + 1), i, i);
    }
  }
  if (!is_irreducible(raw)) {
    throw ValidationError(MatrixDefect::NotIrreducible,
                          "digraph is not strongly connected");
  }
  return InteractionMatrix(n, raw.values);
}

TopologyReport star_topology(const InteractionMatrix& C) {
  const int n = C.dim();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && C.at(i, j) > 0.0) edges.emplace_back(i, j);
    }
  }
  TopologyReport report;
  report.irreducible = true;  // certified by InteractionMatrix construction
  for (int cand = 0; cand < n; ++cand) {
    bool touches_all = true;
    for (const auto& [u, v] : edges) {
      if (u != cand && v != cand) {
        touches_all = false;
        break;
      }
    }
    if (touches_all) {
      report.star_center = cand;
      break;
    }
  }
  return report;
}

CentralityVector::CentralityVector(std::vector<double> scores, double residual)
    : c_(std::move(scores)), residual_(residual) {
  if (c_.size() < 3) {
    throw DomainError("centrality vector needs dimension >= 3, got " +
                      std::to_string(c_.size()));
  }
  double sum = 0.0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!std::isfinite(c_[i]) || c_[i] <= 0.0) {
      throw DomainError("centrality score " + std::to_string(i + 1) +
                        " must be strictly positive");
    }
    if (c_[i] > 0.5 + kSumTol) {
      throw DomainError("centrality score " + std::to_string(i + 1) +
                        " exceeds 1/2; no interaction matrix produces such a score");
    }
    sum += c_[i];
  }
  if (!(std::fabs(sum - 1.0) <= kSumTol)) {
    throw DomainError("centrality scores sum to " + std::to_string(sum) +
                      ", expected 1");
  }
  if (!(residual_ >= 0.0)) {
    throw DomainError("centrality residual must be nonnegative");
  }
}

CentralityVector perron_left_eigenvector(const InteractionMatrix& C, double tol,
                                         long max_iter) {
  const int n = C.dim();
  std::vector<double> c(static_cast<size_t>(n), 1.0 / n);
  std::vector<double> t(static_cast<size_t>(n));
  double residual = 0.0;
  for (long it = 0; it < max_iter; ++it) {
    // t = C' c; since C is row stochastic, t already sums to 1.
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += c[static_cast<size_t>(i)] * C.at(i, j);
      t[static_cast<size_t>(j)] = s;
    }
    residual = linf_distance(t, c);
    if (residual <= tol) {
      return CentralityVector(c, residual);
    }
    // Damped update c <- ((C + I)/2)' c, renormalized against drift.
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      c[static_cast<size_t>(j)] = 0.5 * (t[static_cast<size_t>(j)] + c[static_cast<size_t>(j)]);
      sum += c[static_cast<size_t>(j)];
    }
    for (double& v : c) v /= sum;
  }
  throw NoConvergenceError("perron_left_eigenvector: no convergence after " +
                               std::to_string(max_iter) +
                               " iterations (residual " + std::to_string(residual) + ")",
                           max_iter, residual);
}

}  // namespace dgf
