// The DeGroot-Friedkin self-weight recursion: single steps, trajectories,
// fixed-point solving, and the closed-form inverse map from fixed point back
// to centrality scores.
#pragma once

#include <optional>
#include <vector>

#include "dgf/influence.hpp"
#include "dgf/simplex.hpp"

namespace dgf {

struct Trajectory {
  std::vector<SimplexPoint> points;  // x(0), x(1), ..., never empty
  bool converged = false;
  long iterations = 0;          // number of map applications recorded
  double final_step_norm = 0.0; // ||x(k) - x(k-1)||_inf of the last step
};

struct FixedPointResult {
  SimplexPoint x;
  long iterations;
  double residual;  // ||df_map(x) - x||_inf measured at the returned point
};

// One application of the self-weight map. Vertices are fixed points and are
// matched exactly (some coordinate == 1); any other point maps to the
// normalization of c / (1 - x), which is interior.
SimplexPoint df_map(const SimplexPoint& x, const CentralityVector& c);

// Applies df_map until ||x(k+1) - x(k)||_inf < tol or max_iter is reached,
// recording every iterate. Non-convergence is reported through the flag, not
// an error. A vertex start returns a single-point converged trajectory.
Trajectory iterate(const SimplexPoint& x0, const CentralityVector& c,
                   double tol = 1e-12, long max_iter = 100000);

// Iterates the map from x0 (default: uniform) until the map residual drops
// to tol. Throws ConvergedToVertex when an iterate's largest coordinate
// exceeds 1 - 1e-9 (the star-topology regime) and NoConvergenceError when
// max_iter runs out.
FixedPointResult solve_fixed_point(const SimplexPoint& x0,
                                   const CentralityVector& c,
                                   double tol = 1e-12, long max_iter = 100000);
FixedPointResult solve_fixed_point(const CentralityVector& c,
                                   double tol = 1e-12, long max_iter = 100000);

// Closed-form inverse of the fixed-point condition: the centrality scores
// that make an interior x the fixed point, x (1 - x) / (1 - ||x||^2).
CentralityVector c_from_xstar(const SimplexPoint& x);

}  // namespace dgf
