#include "dgf/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dgf {

namespace {

constexpr double kVertexApproach = 1.0 - 1e-9;

int argmax(const std::vector<double>& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

SimplexPoint df_map(const SimplexPoint& x, const CentralityVector& c) {
  if (x.dim() != c.dim()) {
    throw DomainError("df_map: dimension mismatch");
  }
  if (x.is_vertex()) {
    return x;
  }
  // Not a vertex, so every 1 - x_i is strictly positive.
  std::vector<double> y(static_cast<size_t>(x.dim()));
  double sum = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    y[static_cast<size_t>(i)] = c[i] / (1.0 - x[i]);
    sum += y[static_cast<size_t>(i)];
  }
  for (double& v : y) v /= sum;
  return SimplexPoint(std::move(y));
}

Trajectory iterate(const SimplexPoint& x0, const CentralityVector& c, double tol,
                   long max_iter) {
  Trajectory traj;
  traj.points.push_back(x0);
  if (x0.is_vertex()) {
    traj.converged = true;
    return traj;
  }
  for (long k = 1; k <= max_iter; ++k) {
    SimplexPoint next = df_map(traj.points.back(), c);
    const double step = linf_distance(next.weights(), traj.points.back().weights());
    traj.points.push_back(std::move(next));
    traj.iterations = k;
    traj.final_step_norm = step;
    if (step < tol) {
      traj.converged = true;
      return traj;
    }
  }
  return traj;
}

FixedPointResult solve_fixed_point(const SimplexPoint& x0, const CentralityVector& c,
                                   double tol, long max_iter) {
  SimplexPoint x = x0;
  double residual = 0.0;
  for (long k = 1; k <= max_iter; ++k) {
    SimplexPoint fx = df_map(x, c);
    const double peak = *std::max_element(fx.weights().begin(), fx.weights().end());
    if (peak > kVertexApproach) {
      const int i = argmax(fx.weights());
      throw ConvergedToVertex("iteration approaches vertex of node " +
                                  std::to_string(i + 1) + " (star-topology regime)",
                              i);
    }
    residual = linf_distance(fx.weights(), x.weights());
    if (residual <= tol) {
      // x itself satisfies ||df_map(x) - x||_inf <= tol; return it rather
      // than fx, whose residual has not been measured.
      return FixedPointResult{std::move(x), k, residual};
    }
    x = std::move(fx);
  }
  throw NoConvergenceError("solve_fixed_point: no convergence after " +
                               std::to_string(max_iter) + " iterations (residual " +
                               std::to_string(residual) + ")",
                           max_iter, residual);
}

FixedPointResult solve_fixed_point(const CentralityVector& c, double tol,
                                   long max_iter) {
  return solve_fixed_point(SimplexPoint::uniform(c.dim()), c, tol, max_iter);
}

CentralityVector c_from_xstar(const SimplexPoint& x) {
  for (int i = 0; i < x.dim(); ++i) {
    if (!(x[i] > 0.0 && x[i] < 1.0)) {
      throw DomainError("c_from_xstar requires an interior point");
    }
  }
  double norm_sq = 0.0;
  for (int i = 0; i < x.dim(); ++i) norm_sq += x[i] * x[i];
  const double denom = 1.0 - norm_sq;
  std::vector<double> c(static_cast<size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    c[static_cast<size_t>(i)] = x[i] * (1.0 - x[i]) / denom;
  }
  return CentralityVector(std::move(c));
}

}  // namespace dgf
