#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vgit/enumeration.hpp"
#include "vgit/linearization.hpp"
#include "vgit/subset.hpp"

namespace vgit {

// The weight function phi(I) = (c_I - 1)/(1 - gamma).
// Undefined at gamma = 1 (the exterior wall; see classify_exterior).
Rational phi(const MarkedSubset& I, const Linearization& L);
Rational phi_of_weight(const Rational& c_I, const Linearization& L);

// The clamped ceiling
//   sigma(I) = 0            if c_I < 1
//            = d            if c_I > c-1
//            = ceil(phi(I)) otherwise,
// always in {0..d}. Total on interior linearizations.
int sigma(const MarkedSubset& I, const Linearization& L);
int sigma_of_weight(const Rational& c_I, const Linearization& L);

// Symmetric fast path: with equal weights phi and sigma depend only on |I|.
int sigma_by_card(int card, const Linearization& L);

// True when phi(I) is an integer in [0, d-1], i.e. L lies on the wall
// hyperplane of I at level k = phi(I).
bool on_wall_of(const MarkedSubset& I, const Linearization& L, int* k_out = nullptr);

// All violated hyperplanes (I, k) in canonical form, sorted.
// Uses the cardinality shortcut for symmetric weights; otherwise enumerates
// canonical subsets (cap-guarded).
std::vector<std::pair<std::uint64_t, int>> violated_walls(
    const Linearization& L, const EnumLimits& lim = EnumLimits::from_env());

// Generic: no nonempty proper subset has integral phi in [0, d-1].
bool is_generic(const Linearization& L, const EnumLimits& lim = EnumLimits::from_env());

// Throws OnWallError (carrying the violated hyperplanes) unless generic.
void require_generic(const Linearization& L, const char* op,
                     const EnumLimits& lim = EnumLimits::from_env());

// Memoizing sigma evaluator for loops that hit the same subsets repeatedly.
// Immutable linearization, per-instance cache; not shared across threads.
class SigmaOracle {
 public:
  explicit SigmaOracle(Linearization L) : L_(std::move(L)) {}

  const Linearization& lin() const { return L_; }

  int sigma(const MarkedSubset& I) { return sigma_mask(I.mask()); }
  int sigma_mask(std::uint64_t mask);

 private:
  Linearization L_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace vgit
