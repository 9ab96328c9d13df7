// Variational side of the dynamics: the convex objective whose minimizer is
// the interior fixed point, its subgradient, the KKT certificate, and the
// closed-form dual apparatus with an empirical dual scan.
#pragma once

#include <utility>
#include <vector>

#include "dgf/dynamics.hpp"
#include "dgf/influence.hpp"
#include "dgf/simplex.hpp"

namespace dgf {

struct ObjectiveReport {
  // D_KL(x || c) + H(1 - x); every argmin comparison uses this form since
  // the 1/h factor and additive constant below do not move the argmin.
  double canonical = 0.0;
  // (canonical + n - 2) / h, the form whose subgradient carries the 1/h.
  double scaled = 0.0;
  double h = 1.0;
};

struct KktReport {
  double nu = 0.0;                   // multiplier of the unit-sum constraint
  std::vector<double> stationarity;  // x_i^2 - x_i + c_i exp(-(nu + 2))
  double feasibility = 0.0;          // 1'x - 1

  double max_abs_stationarity() const;
};

struct DualScanResult {
  std::vector<double> nu_grid;
  std::vector<double> zeta_values;
  double best_nu = 0.0;    // grid point attaining the maximum
  double best_zeta = 0.0;  // max of zeta_values
  double primal_value = 0.0;
  double gap = 0.0;  // primal_value - best_zeta, reported, never asserted
};

ObjectiveReport objective(const SimplexPoint& x, const CentralityVector& c,
                          double h = 1.0);

// g_i = (1/h) log(x_i (1 - x_i) / c_i), valid on interior points.
std::vector<double> subgradient(const SimplexPoint& x, const CentralityVector& c,
                                double h = 1.0);

// nu is eliminated through the optimality identity
// exp(-(nu + 2)) = 1 - ||x||^2, which is exact at the optimum.
KktReport kkt_report(const SimplexPoint& x, const CentralityVector& c);

// Positive root r of r (r + 1) = exp(y - 2), i.e.
// -1/2 + sqrt(1/4 + exp(y - 2)), evaluated without cancellation.
double conjugate_root(double y);

// Closed-form conjugate of the extropy-minus-entropy term, summed per
// coordinate: rho + 1 + log rho + exp(y - 2)/rho with rho = conjugate_root.
double entropy_gap_conjugate(const std::vector<double>& y);

// zeta(nu) = -nu - entropy_gap_conjugate(-nu 1 + log c).
double dual_value(double nu, const CentralityVector& c);

// Evaluates zeta on a uniform grid and reports the grid maximum together
// with the primal value at the solved fixed point. The observed gap is
// diagnostic output: the closed-form conjugate above makes zeta increase
// without bound, so the gap depends on the bracket and can be negative.
DualScanResult dual_scan(const CentralityVector& c, double nu_min, double nu_max,
                         int samples = 2001);

// Grid scan plus golden-section refinement around the grid maximum
// (tolerance 1e-10 in nu). Returns (nu, zeta(nu)).
std::pair<double, double> dual_maximize(const CentralityVector& c, double nu_min,
                                        double nu_max);

// Default center for dual brackets: nu from the multiplier identity at x*.
double default_dual_center(const SimplexPoint& xstar);

}  // namespace dgf
