#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vgit/curves.hpp"
#include "vgit/walls.hpp"

namespace vgit {

// Behavior of the birational map across an interior wall. "Forward" is the
// direction from the phi(I) > k chamber to the phi(I) < k chamber; presenting
// the wall from the complement side mirrors forward and backward.
//
// "Regular" labels mean the named direction contracts no curves; whether the
// inverse is an actual morphism additionally needs normality of the quotient,
// which is not settled, so the label deliberately claims less.
struct CrossingReport {
  Wall wall;
  bool forward_contracts_curve = false;
  bool backward_contracts_curve = false;
  bool forward_divisorial = false;
  bool backward_divisorial = false;
  enum class Label {
    DivisorialForward,
    DivisorialBackward,
    Flip,
    RegularForward,
    RegularBackward,
    BijectiveBothWays
  } label = Label::BijectiveBothWays;
  // partitions witnessing the contraction, when one exists
  std::optional<std::vector<MarkedSubset>> forward_witness;
  std::optional<std::vector<MarkedSubset>> backward_witness;
};

std::string to_string(CrossingReport::Label label);

// Classification at a point lying on exactly the wall W:
//   divisor contracted forward  iff k = 0 and 3 <= |I| <= n-2,
//   divisor contracted backward iff k = d-1 and 2 <= |I| <= n-3,
//   a curve is contracted forward iff some partition of I into >= 3 nonempty
//   blocks has sigma-sum k (backward: I^c against d-1-k).
CrossingReport classify_crossing(const Wall& W, const Linearization& L_wall,
                                 const EnumLimits& lim = EnumLimits::from_env());

// Existence of a partition of `ground` into at least 3 nonempty blocks whose
// sigma values sum to `target`; returns the blocks when found. sigma values
// are taken from the supplied evaluator (wall-signed or plain).
std::optional<std::vector<MarkedSubset>> partition_with_sigma_sum(
    const MarkedSubset& ground, int target, const Linearization& L,
    const EnumLimits& lim = EnumLimits::from_env());

// Projection from mark i (defined when c_i > 1 - gamma, d >= 2) is bijective
// iff no partition of the remaining marks into >= 3 blocks has sigma-sum d-1.
bool projection_bijective(const Linearization& L, int mark,
                          const EnumLimits& lim = EnumLimits::from_env());

// Gluing data of the tail marked by I: the attaching weight
//   b_I = (1 - gamma) sigma(I) - (c_I - 1) + gamma
// and the induced linearization (gamma, c_I vector, b_I) on the degree-sigma(I)
// tail cross-section. sigma(I) = d collapses the complement factor.
struct GluingData {
  MarkedSubset subset;
  int sigma_I = 0;
  Rational b;
  int tail_d = 0;
  int tail_n = 0;
  Rational tail_gamma;
  std::vector<Rational> tail_weights;  // weights of I in mark order, then b
  bool one_factor = false;             // sigma(I) = d

  // Identity (sigma(I)-1) gamma + c_I + b = sigma(I)+1, checked exactly.
  std::optional<Linearization> tail_linearization() const;
};
GluingData gluing_data(const MarkedSubset& I, const Linearization& L);

// Exterior walls of the cross-section box.
enum class ExteriorKind {
  ProjectionWall,      // c_i = 1: crossing equals projection from mark i
  SLtwoQuotient,       // gamma = 1: the point-configuration quotient of P^1
  ForgetfulWall,       // c_i = 0: mark i is forgotten
  PointConfigQuotient  // gamma = 0: configurations in P^d with trivial Chow weight
};

struct ExteriorReport {
  ExteriorKind kind;
  int mark = 0;  // for the c_i walls
  std::string detail;
  std::optional<Linearization> projection_target;  // degree d-1 parameters
};

ExteriorReport classify_exterior(const Linearization& L);

}  // namespace vgit
