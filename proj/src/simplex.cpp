#include "dgf/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dgf {

namespace {

void check_same_dim(int a, int b, const char* op) {
  if (a != b) {
    throw DomainError(std::string(op) + ": dimension mismatch (" +
                      std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

SimplexPoint::SimplexPoint(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.size() < 3) {
    throw DomainError("simplex point needs dimension >= 3, got " +
                      std::to_string(w_.size()));
  }
  double sum = 0.0;
  for (size_t i = 0; i < w_.size(); ++i) {
    if (!std::isfinite(w_[i])) {
      throw DomainError("simplex weight " + std::to_string(i + 1) + " is not finite");
    }
    if (w_[i] < 0.0) {
      throw DomainError("simplex weight " + std::to_string(i + 1) + " is negative");
    }
    sum += w_[i];
  }
  if (!(std::fabs(sum - 1.0) <= kSumTol)) {
    throw DomainError("simplex weights sum to " + std::to_string(sum) +
                      ", expected 1");
  }
}

SimplexPoint SimplexPoint::uniform(int n) {
  if (n < 3) throw DomainError("uniform simplex point needs n >= 3");
  return SimplexPoint(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

SimplexPoint SimplexPoint::vertex(int n, int i) {
  if (n < 3) throw DomainError("vertex simplex point needs n >= 3");
  if (i < 0 || i >= n) throw DomainError("vertex index out of range");
  std::vector<double> w(static_cast<size_t>(n), 0.0);
  w[static_cast<size_t>(i)] = 1.0;
  return SimplexPoint(std::move(w));
}

bool SimplexPoint::interior() const {
  return std::all_of(w_.begin(), w_.end(), [](double v) { return v > 0.0; });
}

bool SimplexPoint::is_vertex() const {
  return std::any_of(w_.begin(), w_.end(), [](double v) { return v == 1.0; });
}

PositiveVector::PositiveVector(std::vector<double> entries) : v_(std::move(entries)) {
  if (v_.empty()) throw DomainError("positive vector must be nonempty");
  for (size_t i = 0; i < v_.size(); ++i) {
    if (!std::isfinite(v_[i]) || v_[i] <= 0.0) {
      throw DomainError("entry " + std::to_string(i + 1) +
                        " must be strictly positive and finite");
    }
  }
}

PositiveVector::PositiveVector(const SimplexPoint& p) : PositiveVector(p.weights()) {}

MirrorMap negative_entropy_map() {
  MirrorMap m;
  m.name = "negative_entropy";
  m.value = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += (v > 0.0) ? v * std::log(v) : 0.0;
    return s;
  };
  m.gradient = [](const std::vector<double>& x) {
    std::vector<double> g(x.size());
    for (size_t i = 0; i < x.size(); ++i) g[i] = 1.0 + std::log(x[i]);
    return g;
  };
  m.gradient_inverse = [](const std::vector<double>& mu) {
    std::vector<double> x(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) x[i] = std::exp(mu[i] - 1.0);
    return x;
  };
  return m;
}

MirrorMap half_squared_norm_map() {
  MirrorMap m;
  m.name = "half_squared_norm";
  m.value = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return 0.5 * s;
  };
  m.gradient = [](const std::vector<double>& x) { return x; };
  m.gradient_inverse = [](const std::vector<double>& mu) { return mu; };
  return m;
}

double entropy(const SimplexPoint& p) {
  double s = 0.0;
  for (double v : p.weights()) {
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

double extropy(const SimplexPoint& p) {
  double s = 0.0;
  for (double v : p.weights()) {
    const double t = 1.0 - v;
    if (t > 0.0) s -= t * std::log(t);
  }
  return s;
}

double kl_divergence(const SimplexPoint& p, const SimplexPoint& q) {
  check_same_dim(p.dim(), q.dim(), "kl_divergence");
  double s = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] > 0.0) {
      if (q[i] <= 0.0) {
        throw DomainError("kl_divergence: q has zero weight " +
                          std::to_string(i + 1) + " where p is positive");
      }
      s += p[i] * std::log(p[i] / q[i]);
    }
  }
  return s;
}

double generalized_kl(const PositiveVector& x, const PositiveVector& y) {
  check_same_dim(x.dim(), y.dim(), "generalized_kl");
  double logs = 0.0;
  double diff = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    logs += x[i] * std::log(x[i] / y[i]);
    diff += x[i] - y[i];
  }
  return logs - diff;
}

double bregman_divergence(const MirrorMap& m, const PositiveVector& x,
                          const PositiveVector& y) {
  check_same_dim(x.dim(), y.dim(), "bregman_divergence");
  const auto grad_y = m.gradient(y.entries());
  double inner = 0.0;
  for (int i = 0; i < x.dim(); ++i) inner += grad_y[static_cast<size_t>(i)] * (x[i] - y[i]);
  return m.value(x.entries()) - m.value(y.entries()) - inner;
}

SimplexPoint kl_project_simplex(const PositiveVector& eta) {
  const auto& v = eta.entries();
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  std::vector<double> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / sum;
  return SimplexPoint(std::move(w));
}

DualCoordinates mirror_to_dual(const PositiveVector& x) {
  std::vector<double> mu(static_cast<size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) mu[static_cast<size_t>(i)] = 1.0 + std::log(x[i]);
  return DualCoordinates{std::move(mu)};
}

PositiveVector dual_to_primal(const DualCoordinates& mu) {
  std::vector<double> x(mu.mu.size());
  for (size_t i = 0; i < mu.mu.size(); ++i) {
    if (!std::isfinite(mu.mu[i])) {
      throw DomainError("dual coordinate " + std::to_string(i + 1) + " is not finite");
    }
    x[i] = std::exp(mu.mu[i] - 1.0);
  }
  return PositiveVector(std::move(x));
}

double linf_distance(const std::vector<double>& a, const std::vector<double>& b) {
  check_same_dim(static_cast<int>(a.size()), static_cast<int>(b.size()),
                 "linf_distance");
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace dgf
