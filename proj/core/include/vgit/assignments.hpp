#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vgit/curves.hpp"
#include "vgit/trees.hpp"

namespace vgit {

// An extremal assignment: a choice of assigned vertices Z(G) for every dual
// tree G, proper on each tree and closed under one-edge specialization in
// both directions. Built from a rule; evaluable on any tree.
class ExtremalAssignment {
 public:
  enum class Kind { Empty, Unmarked, TailsWithin, Git, Explicit };

  static ExtremalAssignment empty();
  static ExtremalAssignment unmarked();
  // v is assigned iff some edge cuts off a side containing v whose legs lie
  // entirely inside one of the groups.
  static ExtremalAssignment tails_within(std::vector<MarkedSubset> groups);
  // v is assigned iff its degree under L is zero.
  static ExtremalAssignment git(Linearization L);
  // Explicit tables: per tree (up to leg-fixing isomorphism) the assigned
  // vertices; unknown trees get the empty assignment.
  static ExtremalAssignment explicit_table(
      int n, const std::vector<std::pair<DualTree, std::vector<int>>>& entries);

  Kind kind() const { return kind_; }
  const std::vector<MarkedSubset>& groups() const { return groups_; }
  const std::optional<Linearization>& linearization() const { return lin_; }

  std::vector<bool> assigned(const DualTree& T) const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::Empty;
  std::vector<MarkedSubset> groups_;                       // TailsWithin
  std::optional<Linearization> lin_;                       // Git
  std::map<std::string, std::set<std::string>> explicit_;  // tree key -> vertex fingerprints
};

ExtremalAssignment git_assignment(const Linearization& L);

// Exhaustive verification of the extremal-assignment axioms over all dual
// trees on n legs: properness, and both implication directions of closure
// under every one-edge specialization.
struct ExtremalityReport {
  bool extremal = false;
  long trees_checked = 0;
  long specializations_checked = 0;
  std::string counterexample;  // empty when extremal
};
ExtremalityReport check_extremal(const ExtremalAssignment& Z, int n,
                                 const EnumLimits& lim = EnumLimits::from_env());

// Searches for a generic linearization whose induced assignment equals Z on
// every dual tree with n legs. Candidates cover known chamber families, both
// sides of every wall, and random interior points; the assignment is
// chamber-constant, so one representative per chamber decides that chamber.
//
// For the two-group pattern with both groups of size >= 2 the search is
// settled analytically for every d at once: the two in-group pair tails force
// c_{i1}+c_{i2} < 1 and c_{j1}+c_{j2} < 1, so the lightest mixed pair also
// satisfies c_i + c_j < 1 and its tail would be contracted against the rule.
struct RealizabilityResult {
  std::optional<Linearization> witness;
  enum class Certificate { None, PairwiseWeightContradiction, ChamberExhaustion } certificate =
      Certificate::None;
  std::string detail;
  long chambers_sampled = 0;
};
RealizabilityResult realizability_search(const ExtremalAssignment& Z, int d, int n,
                                         int random_samples = 400,
                                         const EnumLimits& lim = EnumLimits::from_env());

}  // namespace vgit
