// Shared test utilities: deterministic samplers, independent oracles, and
// expected values frozen from 50-digit evaluations of the definitions.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "dgf/influence.hpp"
#include "dgf/sampling.hpp"
#include "dgf/simplex.hpp"

namespace testutil {

using dgf::CentralityVector;
using dgf::DenseMatrix;
using dgf::InteractionMatrix;
using dgf::SimplexPoint;
using dgf::SplitMix64;

// Expected values computed independently at 50-digit precision and rounded
// to double. Comparisons against these carry the rounding of the evaluation
// under test only.
namespace frozen {
inline constexpr double kLog3 = 1.0986122886681096914;
inline constexpr double kEntropyHalfQuarters = 1.0397207708399179641;  // (3/2) log 2
inline constexpr double kExtropyUniform3 = 0.81093021621632876396;     // 2 log(3/2)
inline constexpr double kExtropyFig2C = 0.79150558957055662446;
inline constexpr double kExtropyFig2X = 0.77169005463527590227;
inline constexpr double kKlFig2 = 0.011069284614356539762;  // KL(x* || c), fig2 pair
inline constexpr double kGklOnesVsE = 2.1548454853771357061;    // 3 (e - 2)
inline constexpr double kGklUniformVsHalf = 0.056633012265132490967;  // log(32/27)/3
inline constexpr double kOneMinusLog3 = -0.098612288668109691395;
inline constexpr double kLogTwoThirds = -0.40546510810816438198;
inline constexpr double kNuUniform3 = -1.594534891891835618;   // -2 - log(2/3)
inline constexpr double kNuFig2 = -1.5093770835515287652;      // -2 - log(30/49)
inline constexpr double kCanonicalFig2 = 0.78275933924963244204;
inline constexpr double kRhoAt2 = 0.6180339887498948482;       // (sqrt 5 - 1)/2
inline constexpr double kZetaUniform3 = -0.50158550999065705979;
inline constexpr double kFourSevenths = 0.57142857142857142857;
inline constexpr double kThreeSevenths = 0.42857142857142857143;
inline constexpr double kTwoSevenths = 0.28571428571428571429;
inline constexpr double kOneSeventh = 0.14285714285714285714;
}  // namespace frozen

inline double vec_min(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

inline double vec_max(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end());
}

// Interior simplex sample with a floor on the smallest weight.
inline SimplexPoint sample_interior(int n, SplitMix64& rng, double min_weight) {
  for (;;) {
    SimplexPoint x = dgf::sample_simplex_uniform(n, rng);
    if (vec_min(x.weights()) >= min_weight) return x;
  }
}

// Non-star centrality sample: flat Dirichlet conditioned on score bounds.
inline CentralityVector sample_centrality(int n, SplitMix64& rng,
                                          double max_score = 0.45,
                                          double min_score = 0.02) {
  for (;;) {
    SimplexPoint x = dgf::sample_simplex_uniform(n, rng);
    if (vec_max(x.weights()) <= max_score && vec_min(x.weights()) >= min_score) {
      return CentralityVector(x.weights());
    }
  }
}

inline std::vector<double> sample_positive(int n, SplitMix64& rng, double lo = 0.05,
                                           double hi = 3.0) {
  std::vector<double> v(static_cast<size_t>(n));
  for (double& e : v) e = lo + (hi - lo) * rng.next_unit();
  return v;
}

inline std::vector<int> sample_permutation(int n, SplitMix64& rng) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
  }
  return p;
}

inline std::vector<double> gather(const std::vector<double>& v,
                                  const std::vector<int>& p) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[static_cast<size_t>(p[i])];
  return out;
}

// Dense matrix with positive off-diagonal entries and normalized rows;
// always irreducible.
inline DenseMatrix sample_dense_interaction(int n, SplitMix64& rng) {
  DenseMatrix m;
  m.rows = n;
  m.cols = n;
  m.values.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double v = 0.05 + rng.next_unit();
      m.values[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = v;
      sum += v;
    }
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        m.values[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] /= sum;
      }
    }
  }
  return m;
}

// Star instance: every non-center row points at the center with weight 1;
// the center row spreads randomly over the others.
inline DenseMatrix sample_star_interaction(int n, int center, SplitMix64& rng) {
  DenseMatrix m;
  m.rows = n;
  m.cols = n;
  m.values.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  double sum = 0.0;
  std::vector<double> row(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    if (j == center) continue;
    row[static_cast<size_t>(j)] = 0.05 + rng.next_unit();
    sum += row[static_cast<size_t>(j)];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      if (i == center && j != center) {
        v = row[static_cast<size_t>(j)] / sum;
      } else if (i != center && j == center) {
        v = 1.0;
      }
      m.values[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = v;
    }
  }
  return m;
}

// Independently coded exhaustive star check: a node is a center iff deleting
// it leaves the digraph with no edges at all.
inline std::optional<int> star_center_by_removal(const InteractionMatrix& C) {
  const int n = C.dim();
  for (int cand = 0; cand < n; ++cand) {
    bool edge_left = false;
    for (int i = 0; i < n && !edge_left; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == cand || j == cand || i == j) continue;
        if (C.at(i, j) > 0.0) {
          edge_left = true;
          break;
        }
      }
    }
    if (!edge_left) return cand;
  }
  return std::nullopt;
}

// Golden-section minimizer for smooth scalar convex functions; interval is
// shrunk below 1e-10 which leaves the value accurate to machine noise.
inline double golden_min(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > 1e-10) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return f(0.5 * (a + b));
}

// Brute-force conjugate of the extropy-minus-entropy term: per-coordinate
// minimization of exp(u-1) + u + exp(y-u-1) over u in [y-30, y+30].
inline double entropy_gap_conjugate_brute(const std::vector<double>& y) {
  double total = 0.0;
  for (const double yi : y) {
    total += golden_min(
        [yi](double u) { return std::exp(u - 1.0) + u + std::exp(yi - u - 1.0); },
        yi - 30.0, yi + 30.0);
  }
  return total;
}

// Tangent direction with zero coordinate sum, normalized to unit inf-norm.
inline std::vector<double> sample_tangent_direction(int n, SplitMix64& rng) {
  std::vector<double> d(static_cast<size_t>(n));
  double mean = 0.0;
  for (double& v : d) {
    v = rng.next_unit() - 0.5;
    mean += v;
  }
  mean /= n;
  double peak = 0.0;
  for (double& v : d) {
    v -= mean;
    peak = std::max(peak, std::fabs(v));
  }
  for (double& v : d) v /= peak;
  return d;
}

}  // namespace testutil
