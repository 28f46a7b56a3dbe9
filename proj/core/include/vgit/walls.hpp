#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgit/sigma.hpp"

namespace vgit {

// An interior GIT wall, the hyperplane phi(I,.)^{-1}(k), stored canonically
// under the complement identification (I, k) == (I^c, d-1-k): the stored
// subset contains mark 1, and k is in [0, d-1].
struct Wall {
  MarkedSubset subset;
  int k = 0;
  int d = 0;

  static Wall make(MarkedSubset I, int k, int d);

  int n() const { return subset.n(); }
  // The same wall presented from the complement side (not canonical).
  std::pair<MarkedSubset, int> complement_presentation() const {
    return {subset.complement(), d - 1 - k};
  }
  std::string str() const;

  friend bool operator==(const Wall&, const Wall&) = default;
  friend std::strong_ordering operator<=>(const Wall&, const Wall&) = default;
};

// All canonical walls whose hyperplane meets the open cross-section region:
// feasibility is an exact one-variable interval intersection in gamma.
std::vector<Wall> enumerate_walls(int d, int n,
                                  const EnumLimits& lim = EnumLimits::from_env());

// A rational interior point lying on the wall (uniform weights within each of
// I, I^c). May lie on other walls as well.
Linearization wall_witness(const Wall& w);

// An interior point on exactly this wall and no other (weights within each
// side get distinct small offsets; offsets halve until exclusivity holds).
Linearization exclusive_wall_witness(const Wall& w,
                                     const EnumLimits& lim = EnumLimits::from_env());

// On the symmetric slice c_i = (d+1-(d-1)gamma)/n, the gamma at which the
// cardinality class (m, k) crosses, if the crossing lies in the interior box.
std::optional<Rational> symmetric_slice_wall_gamma(int d, int n, int m, int k);

// The map I -> sigma(I) over canonical nonempty proper subsets, defined only
// at generic linearizations; characterizes the open chamber. Symmetric
// linearizations store the cardinality table instead of the full map.
class ChamberSignature {
 public:
  static ChamberSignature of(const Linearization& L,
                             const EnumLimits& lim = EnumLimits::from_env());

  int d() const { return d_; }
  int n() const { return n_; }
  bool symmetric() const { return symmetric_; }

  int sigma_of_card(int card) const;           // symmetric form only
  int sigma_of(const MarkedSubset& I) const;   // any canonical subset

  friend bool operator==(const ChamberSignature& a, const ChamberSignature& b);

 private:
  int d_ = 0;
  int n_ = 0;
  bool symmetric_ = false;
  std::vector<int> by_card_;            // index = cardinality, 0..n
  std::vector<signed char> by_mask_;    // index = mask >> 1 over odd masks
};

bool same_chamber(const Linearization& a, const Linearization& b,
                  const EnumLimits& lim = EnumLimits::from_env());

// One wall-crossing event on a segment: all hyperplanes crossing at the same
// parameter t are grouped. With symmetric endpoints the walls are reported as
// one representative per cardinality class (I = {1..m}) and class_sizes gives
// the number of subsets in each class.
struct ScanEvent {
  Rational t;
  Rational gamma;              // gamma of L(t)
  std::vector<Wall> walls;
  bool symmetric_classes = false;
  std::vector<long> class_sizes;
};

// Ordered wall crossings of the affine segment L(t) = (1-t) L0 + t L1,
// t in (0,1). Endpoints must be generic points of the same cross-section.
std::vector<ScanEvent> segment_scan(const Linearization& L0, const Linearization& L1,
                                    const EnumLimits& lim = EnumLimits::from_env());

}  // namespace vgit
