#include "dgf/sampling.hpp"

#include <cmath>

namespace dgf {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

SimplexPoint sample_simplex_uniform(int n, SplitMix64& rng) {
  if (n < 3) throw DomainError("simplex sample needs n >= 3");
  std::vector<double> e(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& v : e) {
    v = -std::log(rng.next_unit());
    sum += v;
  }
  for (double& v : e) v /= sum;
  return SimplexPoint(std::move(e));
}

}  // namespace dgf
