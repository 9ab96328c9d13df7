// Simplex geometry: entropy, extropy, KL and Bregman divergences, mirror
// maps, and the generalized-KL projection onto the standard simplex.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dgf/errors.hpp"

namespace dgf {

// Absolute tolerance on unit-sum checks throughout the library.
inline constexpr double kSumTol = 1e-12;

// Point on the standard simplex: nonnegative weights summing to one within
// kSumTol. Dimensions below 3 are rejected (the dynamics degenerate at n=2,
// where every point is fixed).
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> weights);

  static SimplexPoint uniform(int n);
  static SimplexPoint vertex(int n, int i);

  int dim() const { return static_cast<int>(w_.size()); }
  const std::vector<double>& weights() const { return w_; }
  double operator[](int i) const { return w_[static_cast<size_t>(i)]; }

  // Every weight strictly positive.
  bool interior() const;
  // Some weight exactly 1; the remaining weights are then exactly 0.
  bool is_vertex() const;

 private:
  std::vector<double> w_;
};

// Vector with strictly positive finite entries. Positivity is exact (> 0),
// not epsilon-based.
class PositiveVector {
 public:
  explicit PositiveVector(std::vector<double> entries);
  explicit PositiveVector(const SimplexPoint& p);  // requires p interior

  int dim() const { return static_cast<int>(v_.size()); }
  const std::vector<double>& entries() const { return v_; }
  double operator[](int i) const { return v_[static_cast<size_t>(i)]; }

 private:
  std::vector<double> v_;
};

// Mirror (dual) coordinates mu = 1 + log x.
struct DualCoordinates {
  std::vector<double> mu;
};

// Behavior descriptor for a mirror map: the potential, its gradient
// (primal -> dual) and the gradient inverse (dual -> primal). Kept as plain
// functions rather than an enumeration so tests can inject synthetic maps.
struct MirrorMap {
  std::string name;
  std::function<double(const std::vector<double>&)> value;
  std::function<std::vector<double>(const std::vector<double>&)> gradient;
  std::function<std::vector<double>(const std::vector<double>&)> gradient_inverse;
};

// psi(x) = sum_i x_i log x_i, gradient 1 + log x, inverse exp(mu - 1).
MirrorMap negative_entropy_map();
// psi(x) = ||x||^2 / 2 with identity gradient.
MirrorMap half_squared_norm_map();

// H(p) = -sum p_i log p_i, with the 0 log 0 = 0 convention.
double entropy(const SimplexPoint& p);

// H(1 - p), the entropy of the complementary weight vector. Zero at the
// vertices, maximal at the uniform point.
double extropy(const SimplexPoint& p);

// sum p_i log(p_i / q_i). Throws DomainError if q_i = 0 where p_i > 0.
double kl_divergence(const SimplexPoint& p, const SimplexPoint& q);

// sum x_i log(x_i / y_i) - sum (x_i - y_i); agrees with kl_divergence when
// both arguments lie on the simplex.
double generalized_kl(const PositiveVector& x, const PositiveVector& y);

// psi(x) - psi(y) - <grad psi(y), x - y>.
double bregman_divergence(const MirrorMap& m, const PositiveVector& x,
                          const PositiveVector& y);

// Generalized-KL (Bregman) projection of a positive vector onto the simplex;
// reduces to plain normalization eta / sum(eta).
SimplexPoint kl_project_simplex(const PositiveVector& eta);

DualCoordinates mirror_to_dual(const PositiveVector& x);
PositiveVector dual_to_primal(const DualCoordinates& mu);

double linf_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace dgf
