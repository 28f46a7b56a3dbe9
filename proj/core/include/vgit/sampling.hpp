#pragma once

#include <cstdint>
#include <random>

#include "vgit/linearization.hpp"
#include "vgit/trees.hpp"

namespace vgit {

// Deterministic random generators for property tests and chamber sampling.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);  // inclusive
  Rational rational_in(const Rational& lo, const Rational& hi, long max_den = 1000);

  // Random interior cross-section point; weights from a damped integer draw.
  Linearization interior_point(int d, int n);
  // Retries interior points until one is generic.
  Linearization generic_point(int d, int n, const EnumLimits& lim = EnumLimits::from_env());

  // Random DM tree obtained by a random specialization walk.
  DualTree random_tree(int n);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace vgit
