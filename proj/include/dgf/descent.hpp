// Three equivalent solver views of the same recursion - entropic mirror
// descent, KL proximal steps, and natural gradient descent in mirror
// coordinates - plus the I/M projections and a brute-force objective grid.
#pragma once

#include <functional>
#include <utility>

#include "dgf/dynamics.hpp"
#include "dgf/simplex.hpp"
#include "dgf/variational.hpp"

namespace dgf {

struct GridSample {
  SimplexPoint point;  // barycentric grid node
  double value;        // canonical objective there
};

// Multiplicative-weights step x exp(-h g) followed by the generalized-KL
// projection (normalization). Throws NumericRangeError when any exponent
// argument exceeds 700, just below where exp overflows.
SimplexPoint entropic_md_step(const SimplexPoint& x, const std::vector<double>& g,
                              double h);

// Iterates entropic_md_step with the objective subgradient re-evaluated at
// each iterate; reproduces the self-weight recursion step for step.
Trajectory md_solve(const CentralityVector& c, const SimplexPoint& x0,
                    double h = 1.0, double tol = 1e-12, long max_iter = 100000);

// Minimizer over the simplex of D_KL(x || x_prev) + h <g, x>; closed form is
// the same normalization as entropic_md_step and the two agree bitwise.
SimplexPoint proximal_step(const SimplexPoint& x_prev, const std::vector<double>& g,
                           double h);

// The recursion in mirror coordinates mu = 1 + log x: maps mu to
// 1 + log(df_map(exp(mu - 1), c)). Requires exp(mu - 1) to lie on the
// simplex within 1e-9.
DualCoordinates natural_gradient_step(const DualCoordinates& mu,
                                      const CentralityVector& c);

// Evaluates both sides of the dual Bregman identity
// D_{psi*}(grad psi(x), grad psi(y)) = D_psi(y, x), the conjugate being
// derived from the map's gradient inverse. Returns (dual side, primal side).
std::pair<double, double> dual_bregman_check(const MirrorMap& m,
                                             const PositiveVector& x,
                                             const PositiveVector& y);

// M-projection of a positive vector onto the simplex, argmin over x of
// D_psi(y, x); direct calculation gives y / sum(y). Coincides with the
// I-projection kl_project_simplex on this constraint set although the two
// differ on general sets.
SimplexPoint m_project_simplex(const PositiveVector& y);

// Visits every interior barycentric node (i/R, j/R, (R-i-j)/R) for n = 3 in
// lexicographic (i, j) order with the canonical objective value. Boundary
// nodes are skipped: the objective needs interior points.
void scan_objective_grid(
    const CentralityVector& c, int resolution,
    const std::function<void(int, int, const SimplexPoint&, double)>& visit);

// Brute-force minimizer of the canonical objective over the interior grid;
// ties break toward the lexicographically smallest (i, j). Only n = 3 is
// supported - higher dimensions are verified through KKT residuals instead.
GridSample grid_minimize(const CentralityVector& c, int resolution = 200);

}  // namespace dgf
