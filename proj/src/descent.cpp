#include "dgf/descent.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace dgf {

namespace {

// exp overflows to infinity near 709; fail loudly before normalization
// would fold the infinity into every coordinate.
constexpr double kExpGuard = 700.0;

}  // namespace

SimplexPoint entropic_md_step(const SimplexPoint& x, const std::vector<double>& g,
                              double h) {
  if (!x.interior()) {
    throw DomainError("entropic_md_step requires an interior point");
  }
  if (!(h > 0.0)) throw DomainError("entropic_md_step requires h > 0");
  if (static_cast<int>(g.size()) != x.dim()) {
    throw DomainError("entropic_md_step: gradient dimension mismatch");
  }
  std::vector<double> y(static_cast<size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    const double a = -h * g[static_cast<size_t>(i)];
    if (a > kExpGuard) {
      throw NumericRangeError("entropic_md_step: exponent " + std::to_string(a) +
                              " would overflow exp");
    }
    y[static_cast<size_t>(i)] = x[i] * std::exp(a);
  }
  return kl_project_simplex(PositiveVector(std::move(y)));
}

Trajectory md_solve(const CentralityVector& c, const SimplexPoint& x0, double h,
                    double tol, long max_iter) {
  Trajectory traj;
  traj.points.push_back(x0);
  for (long k = 1; k <= max_iter; ++k) {
    const SimplexPoint& cur = traj.points.back();
    SimplexPoint next = entropic_md_step(cur, subgradient(cur, c, h), h);
    const double step = linf_distance(next.weights(), cur.weights());
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

SimplexPoint proximal_step(const SimplexPoint& x_prev, const std::vector<double>& g,
                           double h) {
  // Same closed form; delegating keeps the two bitwise identical.
  return entropic_md_step(x_prev, g, h);
}

DualCoordinates natural_gradient_step(const DualCoordinates& mu,
                                      const CentralityVector& c) {
  const PositiveVector raw = dual_to_primal(mu);
  double sum = 0.0;
  for (double v : raw.entries()) sum += v;
  if (!(std::fabs(sum - 1.0) <= 1e-9)) {
    throw DomainError("natural_gradient_step: exp(mu - 1) sums to " +
                      std::to_string(sum) + ", not on the simplex");
  }
  std::vector<double> w(raw.entries());
  for (double& v : w) v /= sum;
  const SimplexPoint next = df_map(SimplexPoint(std::move(w)), c);
  DualCoordinates out;
  out.mu.resize(static_cast<size_t>(next.dim()));
  for (int i = 0; i < next.dim(); ++i) {
    out.mu[static_cast<size_t>(i)] = 1.0 + std::log(next[i]);
  }
  return out;
}

std::pair<double, double> dual_bregman_check(const MirrorMap& m,
                                             const PositiveVector& x,
                                             const PositiveVector& y) {
  if (x.dim() != y.dim()) throw DomainError("dual_bregman_check: dimension mismatch");
  const auto mu = m.gradient(x.entries());
  const auto lambda = m.gradient(y.entries());
  // Conjugate from the descriptor: psi*(p) = <p, (grad psi)^{-1}(p)> - psi(...).
  // For negative entropy this reduces to sum exp(p - 1).
  const auto conjugate = [&m](const std::vector<double>& p) {
    const auto z = m.gradient_inverse(p);
    double inner = 0.0;
    for (size_t i = 0; i < p.size(); ++i) inner += p[i] * z[i];
    return inner - m.value(z);
  };
  const auto grad_conj_lambda = m.gradient_inverse(lambda);
  double inner = 0.0;
  for (size_t i = 0; i < mu.size(); ++i) {
    inner += grad_conj_lambda[i] * (mu[i] - lambda[i]);
  }
  const double dual_side = conjugate(mu) - conjugate(lambda) - inner;
  const double primal_side = bregman_divergence(m, y, x);
  return {dual_side, primal_side};
}

SimplexPoint m_project_simplex(const PositiveVector& y) {
  const auto& v = y.entries();
  double sum = 0.0;
  for (double e : v) sum += e;
  std::vector<double> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / sum;
  return SimplexPoint(std::move(w));
}

void scan_objective_grid(
    const CentralityVector& c, int resolution,
    const std::function<void(int, int, const SimplexPoint&, double)>& visit) {
  if (c.dim() != 3) {
    throw UnsupportedDimension("objective grid supports n = 3 only, got n = " +
                               std::to_string(c.dim()));
  }
  if (resolution < 10) throw DomainError("grid resolution must be at least 10");
  const double r = static_cast<double>(resolution);
  for (int i = 1; i <= resolution - 2; ++i) {
    for (int j = 1; j <= resolution - 1 - i; ++j) {
      const int k = resolution - i - j;
      SimplexPoint p(std::vector<double>{i / r, j / r, k / r});
      const double value = objective(p, c).canonical;
      visit(i, j, p, value);
    }
  }
}

GridSample grid_minimize(const CentralityVector& c, int resolution) {
  std::optional<GridSample> best;
  scan_objective_grid(c, resolution,
                      [&best](int, int, const SimplexPoint& p, double value) {
                        if (!best || value < best->value) {
                          best = GridSample{p, value};
                        }
                      });
  return *best;
}

}  // namespace dgf
