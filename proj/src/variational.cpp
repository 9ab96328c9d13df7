#include "dgf/variational.hpp"

#include <cmath>
#include <string>

namespace dgf {

namespace {

void require_interior(const SimplexPoint& x, const char* op) {
  if (!x.interior()) {
    throw DomainError(std::string(op) + " requires an interior point");
  }
}

void require_step(double h, const char* op) {
  if (!(h > 0.0)) {
    throw DomainError(std::string(op) + " requires h > 0");
  }
}

}  // namespace

double KktReport::max_abs_stationarity() const {
  double m = 0.0;
  for (double s : stationarity) m = std::max(m, std::fabs(s));
  return m;
}

ObjectiveReport objective(const SimplexPoint& x, const CentralityVector& c, double h) {
  require_interior(x, "objective");
  require_step(h, "objective");
  if (x.dim() != c.dim()) throw DomainError("objective: dimension mismatch");
  ObjectiveReport report;
  report.canonical = kl_divergence(x, SimplexPoint(c.scores())) + extropy(x);
  report.scaled = (report.canonical + x.dim() - 2) / h;
  report.h = h;
  return report;
}

std::vector<double> subgradient(const SimplexPoint& x, const CentralityVector& c,
                                double h) {
  require_interior(x, "subgradient");
  require_step(h, "subgradient");
  if (x.dim() != c.dim()) throw DomainError("subgradient: dimension mismatch");
  std::vector<double> g(static_cast<size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    g[static_cast<size_t>(i)] = std::log(x[i] * (1.0 - x[i]) / c[i]) / h;
  }
  return g;
}

KktReport kkt_report(const SimplexPoint& x, const CentralityVector& c) {
  if (x.dim() != c.dim()) throw DomainError("kkt_report: dimension mismatch");
  double norm_sq = 0.0;
  double sum = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    norm_sq += x[i] * x[i];
    sum += x[i];
  }
  const double q = 1.0 - norm_sq;
  if (!(q > 0.0)) {
    throw DomainError("kkt_report: ||x||^2 must be below 1");
  }
  KktReport report;
  report.nu = -2.0 - std::log(q);
  const double mass = std::exp(-(report.nu + 2.0));
  report.stationarity.resize(static_cast<size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    report.stationarity[static_cast<size_t>(i)] = x[i] * x[i] - x[i] + c[i] * mass;
  }
  report.feasibility = sum - 1.0;
  return report;
}

double conjugate_root(double y) {
  const double t = std::exp(y - 2.0);
  if (t > 1.0) {
    return -0.5 + std::sqrt(0.25 + t);
  }
  // Equivalent form without cancellation for small t.
  return t / (0.5 + std::sqrt(0.25 + t));
}

double entropy_gap_conjugate(const std::vector<double>& y) {
  double total = 0.0;
  for (double yi : y) {
    const double r = conjugate_root(yi);
    total += r + 1.0 + std::log(r) + std::exp(yi - 2.0) / r;
  }
  return total;
}

double dual_value(double nu, const CentralityVector& c) {
  if (!std::isfinite(nu)) throw DomainError("dual_value: nu must be finite");
  std::vector<double> y(static_cast<size_t>(c.dim()));
  for (int i = 0; i < c.dim(); ++i) {
    y[static_cast<size_t>(i)] = -nu + std::log(c[i]);
  }
  return -nu - entropy_gap_conjugate(y);
}

DualScanResult dual_scan(const CentralityVector& c, double nu_min, double nu_max,
                         int samples) {
  if (!(nu_min < nu_max)) throw DomainError("dual_scan: nu_min must be below nu_max");
  if (samples < 2) throw DomainError("dual_scan: need at least 2 samples");
  DualScanResult result;
  result.nu_grid.resize(static_cast<size_t>(samples));
  result.zeta_values.resize(static_cast<size_t>(samples));
  size_t best = 0;
  for (int i = 0; i < samples; ++i) {
    const double nu = nu_min + (nu_max - nu_min) * i / (samples - 1);
    result.nu_grid[static_cast<size_t>(i)] = nu;
    result.zeta_values[static_cast<size_t>(i)] = dual_value(nu, c);
    if (result.zeta_values[static_cast<size_t>(i)] > result.zeta_values[best]) {
      best = static_cast<size_t>(i);
    }
  }
  result.best_nu = result.nu_grid[best];
  result.best_zeta = result.zeta_values[best];
  const FixedPointResult fp = solve_fixed_point(c);
  result.primal_value = objective(fp.x, c).canonical;
  result.gap = result.primal_value - result.best_zeta;
  return result;
}

std::pair<double, double> dual_maximize(const CentralityVector& c, double nu_min,
                                        double nu_max) {
  const int samples = 2001;
  const DualScanResult scan = dual_scan(c, nu_min, nu_max, samples);
  size_t best = 0;
  for (size_t i = 1; i < scan.zeta_values.size(); ++i) {
    if (scan.zeta_values[i] > scan.zeta_values[best]) best = i;
  }
  double lo = scan.nu_grid[best > 0 ? best - 1 : 0];
  double hi = scan.nu_grid[std::min(best + 1, scan.nu_grid.size() - 1)];
  // Golden-section maximization of the concave zeta on [lo, hi].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = dual_value(x1, c);
  double f2 = dual_value(x2, c);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = dual_value(x2, c);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = dual_value(x1, c);
    }
  }
  const double nu = 0.5 * (a + b);
  return {nu, dual_value(nu, c)};
}

double default_dual_center(const SimplexPoint& xstar) {
  double norm_sq = 0.0;
  for (int i = 0; i < xstar.dim(); ++i) norm_sq += xstar[i] * xstar[i];
  const double q = 1.0 - norm_sq;
  if (!(q > 0.0)) throw DomainError("default_dual_center: ||x||^2 must be below 1");
  return -2.0 - std::log(q);
}

}  // namespace dgf
