// Deterministic sampling used for reproducible trajectory starts.
#pragma once

#include <cstdint>

#include "dgf/simplex.hpp"

namespace dgf {

// splitmix64: integer-only state transitions, so a given seed produces the
// same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform draw in (0, 1]: (k + 1) * 2^-53 from the top 53 bits, computed
  // exactly in double precision.
  double next_unit();

 private:
  std::uint64_t state_;
};

// Uniform (flat Dirichlet) sample on the simplex: n unit-rate exponential
// variates -log(u) normalized to unit sum.
SimplexPoint sample_simplex_uniform(int n, SplitMix64& rng);

}  // namespace dgf
