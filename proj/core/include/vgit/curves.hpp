#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vgit/trees.hpp"
#include "vgit/walls.hpp"

namespace vgit {

// The combinatorial type of a GIT-stable degenerate curve: components with
// positive degrees, multinodal singular points (multiplicity = number of
// incident components), and marks sitting either at a singular point or at a
// smooth location of one component (several marks may collide at a location).
//
// The component/singular-point incidence structure must be a hypertree:
// connected with  #components - sum(multiplicity - 1) = 1.
struct CurveType {
  struct SingularPoint {
    std::vector<int> components;  // distinct incident components, sorted
    std::vector<int> marks;       // sorted, possibly empty
    int multiplicity() const { return static_cast<int>(components.size()); }
  };
  struct SmoothLocation {
    int component = 0;
    std::vector<int> marks;  // sorted, nonempty
  };

  int n = 0;
  std::vector<int> component_degree;
  std::vector<SingularPoint> singular_points;
  std::vector<SmoothLocation> smooth_locations;

  static CurveType smooth(int d, int n);  // irreducible, n distinct marks

  int total_degree() const;
  void validate() const;

  // All marks set-theoretically on a component: its smooth marks plus the
  // marks at its singular points.
  MarkedSubset marks_on_component(int c) const;

  // Canonical form deciding marked isomorphism: AHU encoding of the bipartite
  // component/singular-point incidence tree, rooted at the node holding mark 1.
  std::string canonical_key() const;
  bool marked_isomorphic(const CurveType& o) const {
    return n == o.n && canonical_key() == o.canonical_key();
  }
  std::string str() const;
};

// A connected piece left after removing a component or a singular point.
// Marks at severed singular points are included (the closure convention).
struct CurveFragment {
  MarkedSubset marks;
  int degree = 0;
  std::vector<int> components;
  int via_singular = -1;  // the singular point this piece hangs off, if any
};

// Pieces of C minus component c, one per incident singular point.
std::vector<CurveFragment> fragments_minus_component(const CurveType& C, int c);
// Pieces of C minus singular point s, one per incident component; the marks
// at s itself are not included.
std::vector<CurveFragment> fragments_minus_singular(const CurveType& C, int s);

// deg(v) = d - sum of sigma over the leg sets of the components of T minus v.
// Nonnegative, summing to d. On-wall linearizations are rejected with the
// violated hyperplanes.
std::vector<int> degree_assignment(const DualTree& T, const Linearization& L);
std::vector<int> degree_assignment(const DualTree& T, SigmaOracle& sig);

// The vertices receiving degree 0.
std::vector<int> z_assignment(const DualTree& T, const Linearization& L);

// Contracts each maximal connected set of assigned vertices: a set meeting
// the rest in one point becomes a smooth location collecting its legs, one
// meeting the rest in m >= 2 points becomes a multinodal singularity of
// multiplicity m carrying its legs; surviving vertices become components with
// their assigned degrees, surviving edges become plain nodes.
CurveType z_contract(const DualTree& T, const Linearization& L);
CurveType z_contract(const DualTree& T, SigmaOracle& sig);

// Inverse direction: unmarked nodes become edges, marked nodes and
// multiplicity >= 3 points become new vertices carrying the marks as legs,
// multi-mark smooth locations become new leg vertices. Fails when the result
// is not DM-stable (then the curve is no stable model).
DualTree resolve(const CurveType& C);

struct StabilityReport {
  bool stable = false;
  std::vector<std::string> violations;  // all violated necessary conditions
  std::optional<std::string> note;
};

// GIT stability at a generic linearization: the curve must reproduce itself
// under resolve + z_contract. Diagnostics independently report the violated
// weight, multiplicity and tail-degree conditions.
StabilityReport is_git_stable(const CurveType& C, const Linearization& L,
                              const EnumLimits& lim = EnumLimits::from_env());

// sigma on the perturbed side of a wall: at the wall every subset other than
// I, I^c has an unambiguous sigma; the I classes take the side values
//   plus  (phi(I) > k):  sigma(I) = k+1, sigma(I^c) = d-1-k
//   minus (phi(I) < k):  sigma(I) = k,   sigma(I^c) = d-k.
int sigma_signed(const MarkedSubset& J, const Wall& W, const Linearization& L_wall,
                 bool plus_side);

// Interior points of the two chambers adjacent to W along a straight path
// through L_wall; verified to cross no other wall. first = plus side.
std::pair<Linearization, Linearization> perturb_across(
    const Wall& W, const Linearization& L_wall,
    const EnumLimits& lim = EnumLimits::from_env());

// The closed-orbit strictly semistable configuration over a tree whose splits
// contain I: a degree-1 bridge D joins the contracted I side (degrees from
// the minus-side sigma) to the contracted I^c side (plus-side sigma).
// Requires 1 <= k <= d-2; no bridge exists at k = 0 or k = d-1 walls.
struct IkBridge {
  Wall wall;
  CurveType curve;
  int bridge_component = 0;        // index of D in curve
  std::vector<int> side_I;         // component indices of X_I
  std::vector<int> side_Ic;        // component indices of X_{I^c}
};
IkBridge bridge_curve(const DualTree& T, const Wall& W, const Linearization& L_wall);

// Whether C is an (I,k)-bridge for W: a degree-1 component meeting the rest
// in exactly 2 points, sides marked by I and I^c with degrees k and d-(k+1),
// and all side subcurves carrying their signed-sigma degrees.
bool is_ik_bridge(const CurveType& C, const Wall& W, const Linearization& L_wall);

enum class WallStability { Stable, StrictlySSBridgeClosedOrbit, StrictlySS, Unstable };

struct WallStabilityReport {
  WallStability cls = WallStability::Unstable;
  bool has_IIc_tail = false;
  bool stable_plus = false;
  bool stable_minus = false;
  bool bridge = false;
};

// Stability at a point lying on exactly the wall W: stable iff stable on both
// perturbed sides with no tail labeled exactly by I or I^c; strictly
// semistable iff such a tail exists and the curve is stable on one side or is
// an (I,k)-bridge (the closed-orbit case).
WallStabilityReport wall_stability(const CurveType& C, const Wall& W,
                                   const Linearization& L_wall,
                                   const std::optional<Linearization>& plus_side = std::nullopt,
                                   const std::optional<Linearization>& minus_side = std::nullopt,
                                   const EnumLimits& lim = EnumLimits::from_env());

}  // namespace vgit
