#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symbound/numeric.hpp"

namespace symbound {

// Default seed for every randomized report; also the CLI --seed default.
inline constexpr std::uint64_t kDefaultSeed = 20250101u;

// Deterministic source of small exact rationals. Draws are taken directly
// from the engine output (never through distribution objects), so a seed
// pins the sample sequence byte for byte.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi].
  long pick(long lo, long hi);

  // Nonzero +-p/q with 1 <= p, q <= max_abs.
  Rat nonzero_rational(long max_abs = 9);

  // n nonzero entries (an unramified eigenvalue vector).
  std::vector<Rat> satake_alphas(unsigned n, long max_abs = 9);

  // n pairwise distinct nonzero rationals (a Vandermonde-safe point).
  std::vector<Rat> distinct_point(unsigned n, long max_abs = 9);

  // Small positive evaluation parameter a/b with a < b.
  Rat evaluation_parameter(long max_den = 17);

  // Signed rational with larger range, for ceiling checks.
  Rat wide_rational(long max_num = 999, long max_den = 99);

 private:
  std::mt19937_64 rng_;
};

}  // namespace symbound
